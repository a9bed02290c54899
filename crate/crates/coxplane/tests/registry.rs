use std::collections::BTreeSet;

use coxplane::verify::{registry, run, Suite};

const EXPECTED: [&str; 68] = [
    "golden.canonical",
    "golden.examples",
    "golden.field_axioms",
    "golden.conjugation",
    "golden.sign",
    "golden.norm",
    "quaternion.examples",
    "quaternion.norm",
    "quaternion.reflection",
    "quaternion.composition",
    "quaternion.conjugation",
    "quaternion.canonical_pairs",
    "coxeter.cartan",
    "coxeter.coxeter_number",
    "coxeter.conversion",
    "coxeter.round_trip",
    "coxeter.embedding",
    "coxeter.frame",
    "coxeter.eigenvector",
    "coxeter.normalization",
    "coxeter.betas",
    "coxeter.block_diagonal",
    "coxeter.axis_normalizers",
    "group.orders",
    "group.coxeter_relations",
    "group.elements",
    "group.representations",
    "group.orbit_sizes",
    "group.orbit_representations",
    "group.orbit_norms",
    "group.orbit_examples",
    "group.a3_presentation",
    "group.pyritohedral",
    "group.a4_presentation",
    "group.icosians",
    "group.symbolic_orbit",
    "group.voronoi",
    "group.duals",
    "group.affine",
    "group.diagram_automorphism",
    "projection.examples",
    "projection.float_shadows",
    "projection.pythagoras",
    "projection.conjugation_duality",
    "projection.equivariance",
    "projection.root_weight_routes",
    "projection.root_coordinate_normalizers",
    "projection.debruijn",
    "projection.reflections",
    "projection.coxeter_element",
    "projection.beta_matrices",
    "projection.rotation",
    "projection.hypercube",
    "projection.voronoi_rings",
    "quasilattice.positive_radii",
    "quasilattice.voronoi_windows",
    "quasilattice.origin",
    "quasilattice.completeness",
    "quasilattice.d5_invariance",
    "quasilattice.monotonicity",
    "quasilattice.no_duplicates",
    "quasilattice.inflation_rings",
    "quasilattice.five_cells",
    "quasilattice.slab",
    "quasilattice.resource_limit",
    "quasilattice.sorted",
    "quasilattice.json_round_trip",
    "quasilattice.byte_determinism",
];

#[test]
fn every_invariant_is_registered_exactly_once() {
    let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let unique: BTreeSet<&str> = ids.iter().copied().collect();
    assert_eq!(unique.len(), ids.len(), "duplicate ids");
    let expected: BTreeSet<&str> = EXPECTED.into_iter().collect();
    assert_eq!(unique, expected);
}

#[test]
fn ids_are_prefixed_by_their_suite() {
    for c in registry() {
        assert!(c.id.starts_with(&format!("{}.", c.suite.name())), "{}", c.id);
    }
}

#[test]
fn suites_partition_the_registry() {
    let suites =
        [Suite::Golden, Suite::Quaternion, Suite::Coxeter, Suite::Group, Suite::Projection, Suite::Quasilattice];
    let total: usize = suites.iter().map(|s| registry().iter().filter(|c| c.suite == *s).count()).sum();
    assert_eq!(total, registry().len());
    assert!(suites.iter().all(|s| registry().iter().any(|c| c.suite == *s)));
}

#[test]
fn group_suite_passes_and_names_the_order() {
    let report = run(Suite::Group);
    assert_eq!(report.failures(), 0);
    assert!(report.to_string().contains("order(W(A_4)) = 120 PASS"));
}

#[test]
fn projection_suite_passes_and_names_the_coxeter_element() {
    let report = run(Suite::Projection);
    assert_eq!(report.failures(), 0);
    assert!(report.to_string().contains("(R1R2)^5 = I PASS"));
}
