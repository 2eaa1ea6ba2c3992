//! Ground truth: exact total intersection numbers of concrete families, and
//! certification of the maximum MI by exhaustive search (or a steepest-ascent
//! lower bound) on desk-scale instances.
//!
//! The exhaustive scan enumerates index sets in lexicographic order and keeps
//! the objective up to date incrementally: adding member x to F changes I by
//! 2 I({x}, F) + int(x, x), maintained through a per-candidate delta array
//! over the precomputed pairwise intersection table. Objectives fit machine
//! words (I <= int(x,x) max * M^2); results are returned as BigInt.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::{binomial, gaussian_binomial};
use crate::family::{Family, Ground};
use crate::permgroup::SymmetricGround;
use crate::vecspace::GrassmannGround;

// ---------------------------------------------------------------------------
// Total intersection numbers
// ---------------------------------------------------------------------------

fn check_ground(ground: &Ground, family: &Family) -> Result<()> {
    if ground.id() != family.id() {
        return Err(Error::GroundMismatch(format!(
            "family over {} used with ground {}",
            family.id(),
            ground.id()
        )));
    }
    Ok(())
}

/// I(F): the sum of int(A, B) over all ordered pairs of members.
pub fn total_intersection(ground: &Ground, family: &Family) -> Result<BigInt> {
    check_ground(ground, family)?;
    match ground {
        Ground::Grassmann(g) => total_intersection_grassmann(g, family),
        Ground::Symmetric(g) => total_intersection_symmetric(g, family),
    }
}

/// Pairwise sum of intersection dimensions.
pub fn total_intersection_grassmann(g: &GrassmannGround, family: &Family) -> Result<BigInt> {
    check_ground(&Ground::Grassmann(g), family)?;
    let cached = g.cached_pair_table();
    let v = g.size() as usize;
    let mut acc: u64 = 0;
    for &a in family.members() {
        for &b in family.members() {
            acc += match cached {
                Some(t) => u64::from(t[a as usize * v + b as usize]),
                None => u64::from(g.at(a).intersection_dim(g.at(b))?),
            };
        }
    }
    Ok(BigInt::from(acc))
}

/// Fast path for permutations: I(F) = sum over positions (i, j) of
/// |F_{i->j}|^2, with F_{i->j} the members mapping i to j.
pub fn total_intersection_symmetric(g: &SymmetricGround, family: &Family) -> Result<BigInt> {
    check_ground(&Ground::Symmetric(g), family)?;
    let n = g.n() as usize;
    let mut counts = vec![0u64; n * n];
    for &idx in family.members() {
        let p = g.at(idx);
        for i in 0..n {
            counts[i * n + p.apply(i)] += 1;
        }
    }
    Ok(BigInt::from(counts.iter().map(|&c| c * c).sum::<u64>()))
}

/// I(F1, F2): the sum of int(A, B) over A in F1, B in F2.
pub fn total_intersection_pair(ground: &Ground, f1: &Family, f2: &Family) -> Result<BigInt> {
    check_ground(ground, f1)?;
    check_ground(ground, f2)?;
    let mut acc: u64 = 0;
    match ground {
        Ground::Grassmann(g) => {
            let cached = g.cached_pair_table();
            let v = g.size() as usize;
            for &a in f1.members() {
                for &b in f2.members() {
                    acc += match cached {
                        Some(t) => u64::from(t[a as usize * v + b as usize]),
                        None => u64::from(g.at(a).intersection_dim(g.at(b))?),
                    };
                }
            }
        }
        Ground::Symmetric(g) => {
            for &a in f1.members() {
                for &b in f2.members() {
                    acc += u64::from(crate::permgroup::int_perm(g.at(a), g.at(b))?);
                }
            }
        }
    }
    Ok(BigInt::from(acc))
}

// ---------------------------------------------------------------------------
// Search results and witness classification
// ---------------------------------------------------------------------------

/// Structural tags of a family, matching the extremal constructions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WitnessTags {
    /// Equals the full t-star of some t-dimensional subspace.
    pub is_t_star: bool,
    /// The t for which it is a full t-star.
    pub t_star_dim: Option<u32>,
    /// Largest t such that a fixed t-dimensional subspace lies in every member.
    pub contained_in_t_star: Option<u32>,
    /// Union of pairwise disjoint 1-cosets of S_n.
    pub is_union_of_1_cosets: bool,
    /// Number of 1-cosets in that union.
    pub coset_count: Option<u64>,
}

/// Classify a family against the extremal shapes: full t-stars on the
/// Grassmann side, unions of pairwise disjoint 1-cosets on the symmetric side.
pub fn classify_witness(ground: &Ground, family: &Family) -> Result<WitnessTags> {
    check_ground(ground, family)?;
    let mut tags = WitnessTags::default();
    if family.is_empty() {
        return Ok(tags);
    }
    match ground {
        Ground::Grassmann(g) => {
            let (n, k, q) = g.params();
            let mut core = g.at(family.members()[0]).clone();
            for &idx in &family.members()[1..] {
                if core.dim() == 0 {
                    break;
                }
                core = core.intersection(g.at(idx))?;
            }
            let core_dim = core.dim();
            if core_dim >= 1 {
                tags.contained_in_t_star = Some(core_dim);
                for t in (1..=core_dim).rev() {
                    let star_size =
                        gaussian_binomial(u64::from(n - t), i64::from(k - t), u64::from(q));
                    if BigInt::from(family.m()) == star_size {
                        tags.is_t_star = true;
                        tags.t_star_dim = Some(t);
                        break;
                    }
                }
            }
        }
        Ground::Symmetric(g) => {
            let n = g.n() as usize;
            let coset_size: u64 = (1..n as u64).product();
            let m = family.m();
            if m.is_multiple_of(coset_size) {
                let mut counts = vec![0u64; n * n];
                for &idx in family.members() {
                    let p = g.at(idx);
                    for i in 0..n {
                        counts[i * n + p.apply(i)] += 1;
                    }
                }
                let clean = |c: u64| c == 0 || c == coset_size;
                let row_ok = (0..n).any(|i| (0..n).all(|j| clean(counts[i * n + j])));
                let col_ok = (0..n).any(|j| (0..n).all(|i| clean(counts[i * n + j])));
                if row_ok || col_ok {
                    tags.is_union_of_1_cosets = true;
                    tags.coset_count = Some(m / coset_size);
                }
            }
        }
    }
    Ok(tags)
}

/// Outcome of a search for the maximal total intersection number.
#[derive(Clone, Debug)]
pub struct SearchResult {
    pub m: u64,
    /// Best I found; equals MI exactly when `exhaustive`.
    pub best: BigInt,
    pub exhaustive: bool,
    /// Number of optimal families found (exhaustive mode).
    pub optima_count: u64,
    /// First optimal family in enumeration order.
    pub witness: Family,
    pub tags: WitnessTags,
    /// Optimal families, capped at the configured limit.
    pub optima: Option<Vec<Vec<u32>>>,
}

/// Options for `brute_force_mi`.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Refuse when C(v, M) exceeds this.
    pub budget: u64,
    pub workers: usize,
    /// Keep at most this many optimal families when collecting.
    pub optima_cap: u64,
    pub collect_optima: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: 20_000_000,
            workers: 1,
            optima_cap: 1_000_000,
            collect_optima: false,
        }
    }
}

fn pair_table<'a>(ground: &'a Ground, workers: usize) -> Result<(&'a [u8], usize, i64)> {
    let v = ground.size() as usize;
    let table_cap = 12_000usize;
    if v > table_cap {
        return Err(Error::SizeLimit {
            what: "pairwise intersection table".into(),
            requested: format!("{v} x {v}"),
            cap: format!("{table_cap} x {table_cap}"),
        });
    }
    let t = match ground {
        Ground::Grassmann(g) => g.pair_table(workers),
        Ground::Symmetric(g) => g.pair_table(workers),
    };
    Ok((t, v, i64::from(ground.self_intersection())))
}

struct Collector {
    best: i64,
    count: u64,
    witness: Vec<u32>,
    optima: Vec<Vec<u32>>,
    collect: bool,
    cap: u64,
}

impl Collector {
    fn new(collect: bool, cap: u64) -> Collector {
        Collector {
            best: i64::MIN,
            count: 0,
            witness: Vec::new(),
            optima: Vec::new(),
            collect,
            cap,
        }
    }

    fn record(&mut self, val: i64, chosen: &[u32], last: u32) {
        if val > self.best {
            self.best = val;
            self.count = 1;
            self.witness.clear();
            self.witness.extend_from_slice(chosen);
            self.witness.push(last);
            if self.collect {
                self.optima.clear();
                self.optima.push(self.witness.clone());
            }
        } else if val == self.best {
            self.count += 1;
            if self.collect && (self.optima.len() as u64) < self.cap {
                let mut fam = chosen.to_vec();
                fam.push(last);
                self.optima.push(fam);
            }
        }
    }
}

/// Depth-first enumeration over index sets with the delta array carrying
/// I({x}, F) for every candidate x.
#[allow(clippy::too_many_arguments)]
fn scan(
    t: &[u8],
    v: usize,
    m: usize,
    self_int: i64,
    depth: usize,
    start: usize,
    cur: i64,
    delta: &mut [i64],
    chosen: &mut Vec<u32>,
    out: &mut Collector,
) {
    let last_start = v - (m - depth) + 1;
    for x in start..last_start {
        let val = cur + 2 * delta[x] + self_int;
        if depth + 1 == m {
            out.record(val, chosen, x as u32);
        } else {
            chosen.push(x as u32);
            let row = &t[x * v..(x + 1) * v];
            for y in x + 1..v {
                delta[y] += i64::from(row[y]);
            }
            scan(t, v, m, self_int, depth + 1, x + 1, val, delta, chosen, out);
            for y in x + 1..v {
                delta[y] -= i64::from(row[y]);
            }
            chosen.pop();
        }
    }
}

/// Exhaustive maximum of I over all families of size M, with exact optimum
/// count and the first optimal family in enumeration order. Deterministic
/// and independent of the worker count: the space is statically partitioned
/// by leading index and merged by (value, earliest witness).
pub fn brute_force_mi(ground: &Ground, m: u64, opts: &SearchOptions) -> Result<SearchResult> {
    let v = ground.size();
    if m > v {
        return Err(Error::BadParameter(format!(
            "family size {m} exceeds ground size {v}"
        )));
    }
    let states = binomial(v, m as i64);
    if states > BigInt::from(opts.budget) {
        return Err(Error::SizeLimit {
            what: format!("exhaustive search over C({v}, {m}) families"),
            requested: states.to_string(),
            cap: opts.budget.to_string(),
        });
    }
    if m == 0 {
        let fam = Family::new(ground.id(), vec![], v)?;
        return Ok(SearchResult {
            m,
            best: BigInt::from(0),
            exhaustive: true,
            optima_count: 1,
            witness: fam.clone(),
            tags: classify_witness(ground, &fam)?,
            optima: if opts.collect_optima {
                Some(vec![vec![]])
            } else {
                None
            },
        });
    }

    // objectives live in machine words: the largest reachable value is
    // int(x, x) * M^2
    let peak = u128::from(ground.self_intersection()) * u128::from(m) * u128::from(m);
    if peak > i64::MAX as u128 {
        return Err(Error::BadParameter(format!(
            "objective bound {peak} exceeds the machine-word range"
        )));
    }
    let workers = opts.workers.max(1);
    let (t, v, self_int) = pair_table(ground, workers)?;
    let m_us = m as usize;
    let lead_max = v - m_us; // inclusive largest leading index

    let mut results: Vec<Collector> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..workers {
            let collect = opts.collect_optima;
            let cap = opts.optima_cap;
            handles.push(scope.spawn(move || {
                let mut out = Collector::new(collect, cap);
                let mut delta = vec![0i64; v];
                let mut chosen: Vec<u32> = Vec::with_capacity(m_us);
                for lead in (w..=lead_max).step_by(workers) {
                    let val = self_int; // I of the singleton {lead}
                    if m_us == 1 {
                        out.record(val, &[], lead as u32);
                        continue;
                    }
                    chosen.push(lead as u32);
                    let row = &t[lead * v..(lead + 1) * v];
                    for y in lead + 1..v {
                        delta[y] += i64::from(row[y]);
                    }
                    scan(
                        t,
                        v,
                        m_us,
                        self_int,
                        1,
                        lead + 1,
                        val,
                        &mut delta,
                        &mut chosen,
                        &mut out,
                    );
                    for y in lead + 1..v {
                        delta[y] -= i64::from(row[y]);
                    }
                    chosen.pop();
                }
                out
            }));
        }
        for h in handles {
            results.push(h.join().expect("search worker panicked"));
        }
    });

    let best = results.iter().map(|r| r.best).max().unwrap();
    let mut count = 0u64;
    let mut witness: Option<&Vec<u32>> = None;
    for r in &results {
        if r.best == best {
            count += r.count;
            if witness.is_none_or(|w| r.witness < *w) {
                witness = Some(&r.witness);
            }
        }
    }
    let optima = if opts.collect_optima {
        let mut all: Vec<Vec<u32>> = results
            .iter()
            .filter(|r| r.best == best)
            .flat_map(|r| r.optima.iter().cloned())
            .collect();
        all.sort();
        all.truncate(opts.optima_cap as usize);
        Some(all)
    } else {
        None
    };

    let fam = Family::new(ground.id(), witness.unwrap().clone(), ground.size())?;
    Ok(SearchResult {
        m,
        best: BigInt::from(best),
        exhaustive: true,
        optima_count: count,
        tags: classify_witness(ground, &fam)?,
        witness: fam,
        optima,
    })
}

/// Steepest-ascent single-swap search from a seed family of size M.
/// Returns a lower bound for MI: the best family found, never worse than
/// the seed. Deterministic: first best swap in scan order, stop when no
/// swap improves or after `iters` rounds.
pub fn local_search_mi(ground: &Ground, m: u64, seed: &Family, iters: u64) -> Result<SearchResult> {
    check_ground(ground, seed)?;
    if seed.m() != m {
        return Err(Error::BadParameter(format!(
            "seed family has size {}, requested M = {m}",
            seed.m()
        )));
    }
    let (t, v, self_int) = pair_table(ground, 1)?;

    let mut members: Vec<u32> = seed.members().to_vec();
    let mut inside = vec![false; v];
    for &x in &members {
        inside[x as usize] = true;
    }
    let mut delta = vec![0i64; v];
    for y in 0..v {
        let row = &t[y * v..(y + 1) * v];
        delta[y] = members.iter().map(|&x| i64::from(row[x as usize])).sum();
    }
    let mut cur: i64 = members.iter().map(|&x| delta[x as usize]).sum();

    for _ in 0..iters {
        let mut best_gain = 0i64;
        let mut best_swap: Option<(usize, usize)> = None;
        for &out in &members {
            let out = out as usize;
            let removed = cur - 2 * delta[out] + i64::from(t[out * v + out]);
            for inn in 0..v {
                if inside[inn] {
                    continue;
                }
                let val = removed
                    + 2 * (delta[inn] - i64::from(t[inn * v + out]))
                    + i64::from(t[inn * v + inn]);
                if val - cur > best_gain {
                    best_gain = val - cur;
                    best_swap = Some((out, inn));
                }
            }
        }
        let Some((out, inn)) = best_swap else { break };
        inside[out] = false;
        inside[inn] = true;
        let pos = members.iter().position(|&x| x as usize == out).unwrap();
        members[pos] = inn as u32;
        for y in 0..v {
            delta[y] += i64::from(t[inn * v + y]) - i64::from(t[out * v + y]);
        }
        cur += best_gain;
        debug_assert_eq!(cur, members.iter().map(|&x| delta[x as usize]).sum::<i64>());
        debug_assert_eq!(self_int, i64::from(t[inn * v + inn]));
    }

    let fam = Family::new(ground.id(), members, ground.size())?;
    Ok(SearchResult {
        m,
        best: BigInt::from(cur),
        exhaustive: false,
        optima_count: 1,
        tags: classify_witness(ground, &fam)?,
        witness: fam,
        optima: None,
    })
}
