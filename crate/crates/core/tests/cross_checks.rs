//! End-to-end flows through the public API: a construction is
//! materialized, measured directly, reflected through the scheme
//! machinery, and pinned against its closed form and bounds — every
//! comparison exact.

use tinum_core::bounds::{
    bound_grassmann_dual_pair, bound_grassmann_general, bound_grassmann_refined, bound_symmetric,
    symmetric_b1_identity,
};
use tinum_core::exactnum::rat;
use tinum_core::extremal::{star_value, t0_value};
use tinum_core::family::{parse_family_text, write_family_text, Ground};
use tinum_core::oracle::{
    brute_force_mi, classify_witness, local_search_mi, total_intersection, SearchOptions,
};
use tinum_core::permgroup::{block_shape, t0_family, SymmetricGround};
use tinum_core::schemes::{
    conjugacy_tables, dual_distribution, grassmann_tables, inner_distribution,
};
use tinum_core::vecspace::{coordinate_subspace, full_t_star, GrassmannGround};
use tinum_core::BigInt;

#[test]
fn star_pipeline_grassmann() {
    let g = GrassmannGround::enumerate(4, 2, 2, 200_000).unwrap();
    let ground = Ground::Grassmann(&g);
    let star = full_t_star(&g, &coordinate_subspace(4, 2, 1).unwrap()).unwrap();

    // closed form, direct measurement, and the file round trip agree
    let direct = total_intersection(&ground, &star).unwrap();
    assert_eq!(direct, star_value(4, 2, 1, 2).unwrap());
    let text = write_family_text(&ground, &star, true);
    assert_eq!(parse_family_text(&text, &ground).unwrap(), star);

    // the scheme sees the star as tight for both dual bound forms
    let tables = grassmann_tables(4, 2, 2).unwrap();
    let inner = inner_distribution(&tables, &ground, &star).unwrap();
    let dual = dual_distribution(&tables, &inner, star.m()).unwrap();
    let (b1_form, tail_form) = bound_grassmann_dual_pair(4, 2, 2, &dual, star.m()).unwrap();
    assert_eq!(b1_form, rat(direct.clone()));
    assert_eq!(tail_form, rat(direct.clone()));

    // the exhaustive maximum cannot beat the star, and the closed bounds
    // pin it from above
    let best = brute_force_mi(&ground, star.m(), &SearchOptions::default()).unwrap();
    assert_eq!(best.best, direct);
    assert!(bound_grassmann_general(4, 2, 2, 7).unwrap().value >= rat(direct.clone()));
    assert!(bound_grassmann_refined(4, 2, 2, 7).unwrap().value >= rat(direct));

    // the star is among the optima; classify a star directly
    let tags = classify_witness(&ground, &star).unwrap();
    assert!(tags.is_t_star);
}

#[test]
fn block_pipeline_symmetric() {
    let g = SymmetricGround::enumerate(5, 8).unwrap();
    let ground = Ground::Symmetric(&g);
    let s = 24u64; // one full 1-coset
    let shape = block_shape(5, s).unwrap();
    assert_eq!((shape.a0, shape.a1, shape.pad), (1, 0, 0));
    let fam = t0_family(&g, s).unwrap();

    let direct = total_intersection(&ground, &fam).unwrap();
    assert_eq!(direct, t0_value(5, 1, 0).unwrap());
    assert_eq!(direct, BigInt::from(1152));

    // the b_1 identity reproduces the direct value through the scheme
    let tables = conjugacy_tables(5, 8).unwrap();
    let inner = inner_distribution(&tables, &ground, &fam).unwrap();
    let dual = dual_distribution(&tables, &inner, fam.m()).unwrap();
    assert_eq!(
        symmetric_b1_identity(5, fam.m(), &dual.b()[1]),
        rat(direct.clone())
    );

    // local search from the block seed meets the closed upper bound,
    // certifying the maximum without exhaustion
    let found = local_search_mi(&ground, s, &fam, 200).unwrap();
    assert_eq!(found.best, direct);
    assert_eq!(bound_symmetric(5, s).unwrap().value, rat(direct));
    assert!(found.tags.is_union_of_1_cosets);
}
