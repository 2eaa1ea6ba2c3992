//! Families: a ground-set descriptor plus a sorted set of member indices.

use crate::error::{Error, Result};

/// Identifies the ground set a family lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroundId {
    /// All k-dimensional subspaces of F_q^n.
    Grassmann { n: u32, k: u32, q: u32 },
    /// All permutations of 1..n.
    Symmetric { n: u32 },
}

impl std::fmt::Display for GroundId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroundId::Grassmann { n, k, q } => write!(f, "grassmann {n} {k} {q}"),
            GroundId::Symmetric { n } => write!(f, "symmetric {n}"),
        }
    }
}

impl GroundId {
    /// Parse a ground descriptor: "grassmann n k q" or "symmetric n".
    pub fn parse(s: &str) -> Result<GroundId> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let int = |t: &str| -> Result<u32> {
            t.parse()
                .map_err(|_| Error::Parse(format!("bad integer {t:?} in ground descriptor")))
        };
        match toks.as_slice() {
            ["grassmann", n, k, q] => Ok(GroundId::Grassmann {
                n: int(n)?,
                k: int(k)?,
                q: int(q)?,
            }),
            ["symmetric", n] => Ok(GroundId::Symmetric { n: int(n)? }),
            _ => Err(Error::Parse(format!("bad ground descriptor {s:?}"))),
        }
    }
}

/// Either ground set, for operations that dispatch on the kind.
pub enum Ground<'a> {
    Grassmann(&'a crate::vecspace::GrassmannGround),
    Symmetric(&'a crate::permgroup::SymmetricGround),
}

impl Ground<'_> {
    pub fn id(&self) -> GroundId {
        match self {
            Ground::Grassmann(g) => g.id(),
            Ground::Symmetric(g) => g.id(),
        }
    }

    pub fn size(&self) -> u64 {
        match self {
            Ground::Grassmann(g) => g.size(),
            Ground::Symmetric(g) => g.size(),
        }
    }

    /// int(x, x) for every ground element: the subspace dimension k, or n.
    pub fn self_intersection(&self) -> u32 {
        match self {
            Ground::Grassmann(g) => g.params().1,
            Ground::Symmetric(g) => g.n(),
        }
    }
}

/// A family over some ground set: sorted, duplicate-free member indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    id: GroundId,
    members: Vec<u32>,
}

impl Family {
    /// Build a family, sorting and validating the indices against the ground size.
    pub fn new(id: GroundId, mut members: Vec<u32>, ground_size: u64) -> Result<Family> {
        members.sort_unstable();
        members.dedup();
        if let Some(&max) = members.last() {
            if u64::from(max) >= ground_size {
                return Err(Error::BadParameter(format!(
                    "member index {max} out of range for ground of size {ground_size}"
                )));
            }
        }
        Ok(Family { id, members })
    }

    pub fn id(&self) -> GroundId {
        self.id
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn m(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, idx: u32) -> bool {
        self.members.binary_search(&idx).is_ok()
    }
}

// ---------------------------------------------------------------------------
// Family text format
// ---------------------------------------------------------------------------
//
// Header line: "grassmann n k q" or "symmetric n". Then either one line
// "indices: i1 i2 ..." or explicit members: for subspaces, one basis row
// per line (digits in [0, q) separated by spaces) with blank lines between
// subspaces; for permutations, one-line notation per line.

/// Ground descriptor from the header line of a family file.
pub fn family_header(text: &str) -> Result<GroundId> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or_else(|| Error::Parse("empty family file".into()))?;
    GroundId::parse(first)
}

/// Parse a family file against an already-built ground set.
pub fn parse_family_text(text: &str, ground: &Ground) -> Result<Family> {
    let id = family_header(text)?;
    if id != ground.id() {
        return Err(Error::GroundMismatch(format!(
            "file is over {id}, ground is {}",
            ground.id()
        )));
    }
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.starts_with('#'))
        .skip_while(|l| l.is_empty());
    lines.next(); // header
    let body: Vec<&str> = lines.collect();

    if let Some(idx_line) = body
        .iter()
        .map(|l| l.trim())
        .find(|l| l.starts_with("indices:"))
    {
        let members: Result<Vec<u32>> = idx_line["indices:".len()..]
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad index {t:?}")))
            })
            .collect();
        return Family::new(id, members?, ground.size());
    }

    let mut members = Vec::new();
    match ground {
        Ground::Symmetric(g) => {
            for line in body.iter().filter(|l| !l.is_empty()) {
                let p = crate::permgroup::Permutation::parse(line)?;
                members.push(g.index_of(&p)?);
            }
        }
        Ground::Grassmann(g) => {
            let (n, _, q) = g.params();
            let mut block: Vec<Vec<u8>> = Vec::new();
            let flush = |block: &mut Vec<Vec<u8>>, members: &mut Vec<u32>| -> Result<()> {
                if block.is_empty() {
                    return Ok(());
                }
                let s = crate::vecspace::Subspace::from_rows(n, q, std::mem::take(block))?;
                let idx = g.index_of(&s).ok_or_else(|| {
                    Error::Parse(format!(
                        "subspace of dimension {} not in this ground",
                        s.dim()
                    ))
                })?;
                members.push(idx);
                Ok(())
            };
            for line in &body {
                if line.is_empty() {
                    flush(&mut block, &mut members)?;
                    continue;
                }
                let row: Result<Vec<u8>> = line
                    .split_whitespace()
                    .map(|t| {
                        t.parse()
                            .map_err(|_| Error::Parse(format!("bad matrix entry {t:?}")))
                    })
                    .collect();
                block.push(row?);
            }
            flush(&mut block, &mut members)?;
        }
    }
    Family::new(id, members, ground.size())
}

/// Render a family file; `explicit` writes the members themselves rather
/// than their indices.
pub fn write_family_text(ground: &Ground, family: &Family, explicit: bool) -> String {
    let mut out = format!("{}\n", ground.id());
    if !explicit {
        let idx: Vec<String> = family.members().iter().map(|i| i.to_string()).collect();
        out.push_str(&format!("indices: {}\n", idx.join(" ")));
        return out;
    }
    match ground {
        Ground::Symmetric(g) => {
            for &i in family.members() {
                out.push_str(&g.at(i).to_string());
                out.push('\n');
            }
        }
        Ground::Grassmann(g) => {
            for &i in family.members() {
                out.push_str(&g.at(i).to_text());
                out.push_str("\n\n");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_id_round_trip() {
        for s in ["grassmann 4 2 2", "symmetric 5"] {
            let id = GroundId::parse(s).unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert!(GroundId::parse("johnson 4 2").is_err());
        assert!(GroundId::parse("grassmann 4 2").is_err());
    }

    #[test]
    fn family_sorts_and_checks_bounds() {
        let id = GroundId::Symmetric { n: 3 };
        let f = Family::new(id, vec![4, 1, 1, 0], 6).unwrap();
        assert_eq!(f.members(), &[0, 1, 4]);
        assert_eq!(f.m(), 3);
        assert!(f.contains(4) && !f.contains(2));
        assert!(Family::new(id, vec![6], 6).is_err());
    }

    #[test]
    fn family_text_round_trips() {
        let sg = crate::permgroup::SymmetricGround::enumerate(4, 8).unwrap();
        let ground = Ground::Symmetric(&sg);
        let fam = Family::new(sg.id(), vec![0, 5, 17], sg.size()).unwrap();
        for explicit in [false, true] {
            let text = write_family_text(&ground, &fam, explicit);
            assert_eq!(family_header(&text).unwrap(), sg.id());
            let back = parse_family_text(&text, &ground).unwrap();
            assert_eq!(back, fam);
        }

        let gg = crate::vecspace::GrassmannGround::enumerate(4, 2, 3, 200_000).unwrap();
        let ground = Ground::Grassmann(&gg);
        let fam = Family::new(gg.id(), vec![2, 9, 40, 77], gg.size()).unwrap();
        for explicit in [false, true] {
            let text = write_family_text(&ground, &fam, explicit);
            let back = parse_family_text(&text, &ground).unwrap();
            assert_eq!(back, fam);
        }
    }

    #[test]
    fn family_text_parser_tolerates_layout() {
        let sg = crate::permgroup::SymmetricGround::enumerate(3, 8).unwrap();
        let ground = Ground::Symmetric(&sg);
        // comments, stray blank lines, duplicate indices
        let text = "# family of two\n\nsymmetric 3\n\nindices: 1 1 0\n";
        let fam = parse_family_text(text, &ground).unwrap();
        assert_eq!(fam.members(), &[0, 1]);

        let gg = crate::vecspace::GrassmannGround::enumerate(4, 2, 2, 200_000).unwrap();
        let gground = Ground::Grassmann(&gg);
        // a block of the wrong dimension is not a member of this ground
        let text = "grassmann 4 2 2\n1 0 0 0\n";
        assert!(parse_family_text(text, &gground).is_err());
        // two rows spanning a line (dependent rows) canonicalize to dim 1
        let text = "grassmann 4 2 2\n1 0 0 0\n1 0 0 0\n";
        assert!(parse_family_text(text, &gground).is_err());
    }

    #[test]
    fn family_text_rejects_mismatches() {
        let sg = crate::permgroup::SymmetricGround::enumerate(3, 8).unwrap();
        let ground = Ground::Symmetric(&sg);
        assert!(parse_family_text("grassmann 3 1 2\nindices: 0\n", &ground).is_err());
        assert!(parse_family_text("symmetric 3\nindices: 0 99\n", &ground).is_err());
        assert!(parse_family_text("", &ground).is_err());
    }
}
