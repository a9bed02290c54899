//! Coxeter-Weyl groups of A3 and A4, their orbits, Voronoi vertex sets and
//! the quaternionic presentations of their elements.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::coxeter::{cartan_inverse, cartan_matrix, simple_roots_quaternion, Basis, Diagram, LatticeVector};
use crate::golden::{GoldenRational, Rational};
use crate::matrix::Matrix;
use crate::quaternion::{ActionKind, ElementPair, GoldenQuaternion};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    WA3,
    AutA3,
    WA4,
    AutA4,
    /// The dihedral group of order 10 generated by `r1r3` and `r2r4` inside W(A4).
    WH2,
}

impl GroupKind {
    pub const ALL: [GroupKind; 5] =
        [GroupKind::WA3, GroupKind::AutA3, GroupKind::WA4, GroupKind::AutA4, GroupKind::WH2];

    /// The diagram whose quaternions and weights the elements act on.
    pub fn diagram(self) -> Diagram {
        match self {
            GroupKind::WA3 | GroupKind::AutA3 => Diagram::A3,
            GroupKind::WA4 | GroupKind::AutA4 | GroupKind::WH2 => Diagram::A4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupKind::WA3 => "W(A3)",
            GroupKind::AutA3 => "Aut(A3)",
            GroupKind::WA4 => "W(A4)",
            GroupKind::AutA4 => "Aut(A4)",
            GroupKind::WH2 => "W(H2)",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A group element in three views: the quaternion pair, the orthogonal
/// matrix it induces on quaternion coordinates, and the integer matrix acting
/// on weight coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylElement {
    matrix: Matrix<GoldenRational>,
    pair: ElementPair,
    weight_action: Matrix<i64>,
}

impl WeylElement {
    fn from_parts(pair: ElementPair, weight_action: Matrix<i64>) -> Self {
        WeylElement { matrix: pair.matrix(), pair, weight_action }
    }

    pub fn identity(rank: usize) -> Self {
        WeylElement::from_parts(ElementPair::identity(), Matrix::identity(rank))
    }

    /// Matrix on quaternion coordinates; column `j` is the image of `e_j`.
    pub fn matrix(&self) -> &Matrix<GoldenRational> {
        &self.matrix
    }

    /// The pair `[p,q]`, when both components lie in Q(τ).
    pub fn pair(&self) -> Option<&ElementPair> {
        if self.pair.is_scaled() {
            None
        } else {
            Some(&self.pair)
        }
    }

    /// The pair, possibly with its √2 bookkeeping flag set.
    pub fn scaled_pair(&self) -> &ElementPair {
        &self.pair
    }

    pub fn kind(&self) -> ActionKind {
        self.pair.kind()
    }

    pub fn weight_action(&self) -> &Matrix<i64> {
        &self.weight_action
    }

    /// Apply `self`, then `then`.
    pub fn then(&self, then: &WeylElement) -> WeylElement {
        WeylElement::from_parts(self.pair.then(&then.pair), &then.weight_action * &self.weight_action)
    }

    pub fn apply_quaternion(&self, q: &GoldenQuaternion) -> GoldenQuaternion {
        self.pair.apply(q)
    }

    /// Image of `v`, returned in `v`'s basis.
    pub fn apply_vector(&self, v: &LatticeVector) -> LatticeVector {
        let a = v.to_weight();
        let m = self.weight_action.map(|x| Rational::from_integer((*x).into()));
        LatticeVector::new(v.diagram(), Basis::Weight, m.apply(a.coords()))
            .expect("weight action has the right size")
            .convert(v.basis())
    }

    /// `Mᵀ M = I` on quaternion coordinates.
    pub fn is_orthogonal(&self) -> bool {
        (&self.matrix.transpose() * &self.matrix).is_identity()
    }

    /// `Wᵀ C⁻¹ W = C⁻¹` on weight coordinates.
    pub fn preserves_weight_form(&self, diagram: Diagram) -> bool {
        let Ok(ci) = cartan_inverse(diagram) else { return false };
        let w = self.weight_action.map(|x| Rational::from_integer((*x).into()));
        &(&w.transpose() * &ci) * &w == ci
    }

    pub fn is_identity(&self) -> bool {
        self.weight_action.is_identity()
    }

    fn key(&self) -> Vec<i64> {
        self.weight_action.to_rows().concat()
    }
}

/// `r_i(a) = a − a_i (row i of C)`, as a matrix on weight coordinates.
pub fn simple_reflection_weight(diagram: Diagram, i: usize) -> Result<Matrix<i64>> {
    let c = cartan_matrix(diagram)?;
    let n = diagram.rank();
    if i >= n {
        return Err(Error::DimensionMismatch { expected: n, got: i + 1 });
    }
    Ok(Matrix::from_fn(n, n, |r, col| {
        let id = (r == col) as i64;
        if col == i {
            id - c.get(r, i).to_integer().try_into().unwrap_or(0i64)
        } else {
            id
        }
    }))
}

fn reflection_element(diagram: Diagram, i: usize) -> Result<WeylElement> {
    let roots = simple_roots_quaternion(diagram)?;
    let a = &roots[i];
    let pair = match diagram.rank() {
        // |α| = √2: the pair [α/√2, −α/√2]* is carried with the √2 flag.
        3 => ElementPair::new_scaled(a.clone(), -a, ActionKind::Star),
        // stored α = √2·α_true with |α_true| = √2, so α_true/√2 = α/2.
        _ => ElementPair::new(a.half(), -a.half(), ActionKind::Star),
    };
    Ok(WeylElement::from_parts(pair, simple_reflection_weight(diagram, i)?))
}

fn reversal(n: usize) -> Matrix<i64> {
    Matrix::from_fn(n, n, |i, j| (i + j + 1 == n) as i64)
}

/// The generators used to build `which`.
pub fn generators(which: GroupKind) -> Vec<WeylElement> {
    let d = which.diagram();
    let simple: Vec<WeylElement> =
        (0..d.rank()).map(|i| reflection_element(d, i).expect("A3 and A4 have quaternion roots")).collect();
    match which {
        GroupKind::WA3 | GroupKind::WA4 => simple,
        GroupKind::AutA3 => {
            let e1 = GoldenQuaternion::unit(1);
            let gamma = WeylElement::from_parts(ElementPair::new(e1.clone(), -e1, ActionKind::Star), reversal(3));
            let mut g = simple;
            g.push(gamma);
            g
        }
        GroupKind::AutA4 => {
            let mut g = simple;
            g.push(a4_diagram_automorphism());
            g
        }
        GroupKind::WH2 => vec![simple[0].then(&simple[2]), simple[1].then(&simple[3])],
    }
}

/// The Dynkin-diagram flip of A4, `a_i ↦ a_{5−i}`.
///
/// It equals `−w0` with `w0` the longest element of W(A4), so its pair is
/// `[−p0, q0]` where `[p0, q0]` is the (plain) pair of `w0`.
pub fn a4_diagram_automorphism() -> WeylElement {
    let w0_action = reversal(4).map(|x| -x);
    let w0 = closure(&generators(GroupKind::WA4), 4)
        .into_iter()
        .find(|e| *e.weight_action() == w0_action)
        .expect("W(A4) contains its longest element");
    let pair = w0.scaled_pair();
    WeylElement::from_parts(ElementPair::new(-pair.p(), pair.q().clone(), pair.kind()), reversal(4))
}

fn closure(gens: &[WeylElement], rank: usize) -> Vec<WeylElement> {
    let id = WeylElement::identity(rank);
    let mut seen = BTreeSet::new();
    seen.insert(id.key());
    let mut out = vec![id.clone()];
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for s in gens {
                let h = g.then(s);
                if seen.insert(h.key()) {
                    out.push(h.clone());
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    out
}

/// All elements of the group, identity first, in breadth-first order.
pub fn generate_group(which: GroupKind) -> Vec<WeylElement> {
    closure(&generators(which), which.diagram().rank())
}

fn orbit_unchecked(start: &LatticeVector) -> Vec<LatticeVector> {
    let d = start.diagram();
    let c = cartan_matrix(d).expect("lattice vectors are type A");
    let start = start.to_weight();
    let mut seen = BTreeSet::new();
    seen.insert(start.coords().to_vec());
    let mut out = vec![start.clone()];
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for i in 0..d.rank() {
                let ai = &v.coords()[i];
                if ai.is_zero() {
                    continue;
                }
                let coords: Vec<Rational> = v.coords().iter().zip(c.row(i)).map(|(x, ci)| x - ai * ci).collect();
                if seen.insert(coords.clone()) {
                    let w = LatticeVector::new(d, Basis::Weight, coords).expect("same diagram");
                    out.push(w.clone());
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    out
}

/// Weyl orbit of a dominant weight, in weight coordinates.
pub fn orbit(highest_weight: &LatticeVector) -> Result<Vec<LatticeVector>> {
    let a = highest_weight.to_weight();
    if let Some(index) = a.coords().iter().position(Signed::is_negative) {
        return Err(Error::NegativeCoordinate { index });
    }
    Ok(orbit_unchecked(&a))
}

/// Orbit of the generic weight `(a1, a2, a3, a4)` as integer linear forms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SymbolicVector {
    /// Row `i` holds the coefficients of `a_1..a_4` in the `i`-th coordinate.
    pub forms: [[i64; 4]; 4],
}

impl SymbolicVector {
    pub fn identity() -> Self {
        let mut forms = [[0; 4]; 4];
        for (i, row) in forms.iter_mut().enumerate() {
            row[i] = 1;
        }
        SymbolicVector { forms }
    }

    /// Parses forms such as `a2+a3+a4` or `-a1-a2`.
    pub fn parse_form(s: &str) -> Option<[i64; 4]> {
        let mut out = [0i64; 4];
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace() && *c != '_' && *c != '$').collect();
        let bytes = cleaned.as_bytes();
        let mut i = 0;
        if bytes.is_empty() {
            return None;
        }
        while i < bytes.len() {
            let sign = match bytes[i] {
                b'+' => {
                    i += 1;
                    1
                }
                b'-' => {
                    i += 1;
                    -1
                }
                _ => 1,
            };
            let mut coeff = 0i64;
            let mut has_coeff = false;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                coeff = coeff * 10 + (bytes[i] - b'0') as i64;
                has_coeff = true;
                i += 1;
            }
            if i >= bytes.len() || bytes[i] != b'a' {
                return None;
            }
            i += 1;
            let idx = *bytes.get(i)?;
            if !(b'1'..=b'4').contains(&idx) {
                return None;
            }
            i += 1;
            out[(idx - b'1') as usize] += sign * if has_coeff { coeff } else { 1 };
        }
        Some(out)
    }

    pub fn parse(cells: &[&str]) -> Option<Self> {
        if cells.len() != 4 {
            return None;
        }
        let mut forms = [[0; 4]; 4];
        for (f, c) in forms.iter_mut().zip(cells) {
            *f = SymbolicVector::parse_form(c)?;
        }
        Some(SymbolicVector { forms })
    }

    /// The vector obtained by substituting numeric Dynkin labels.
    pub fn evaluate(&self, a: &[i64; 4]) -> [i64; 4] {
        self.forms.map(|row| row.iter().zip(a).map(|(c, x)| c * x).sum())
    }
}

fn write_form(out: &mut impl fmt::Write, row: &[i64; 4]) -> fmt::Result {
    let mut first = true;
    for (i, &c) in row.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 {
            "-"
        } else if first {
            ""
        } else {
            "+"
        };
        let mag = c.unsigned_abs();
        if mag == 1 {
            write!(out, "{}a{}", sign, i + 1)?;
        } else {
            write!(out, "{}{}a{}", sign, mag, i + 1)?;
        }
        first = false;
    }
    if first {
        out.write_char('0')?;
    }
    Ok(())
}

impl fmt::Display for SymbolicVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.forms.iter().enumerate() {
            if i > 0 {
                f.write_str("\t")?;
            }
            write_form(f, row)?;
        }
        Ok(())
    }
}

/// The 120 forms `W(A4)(a1ω1 + a2ω2 + a3ω3 + a4ω4)`, sorted.
pub fn symbolic_orbit() -> Vec<SymbolicVector> {
    let mut out: Vec<SymbolicVector> = generate_group(GroupKind::WA4)
        .iter()
        .map(|e| {
            let w = e.weight_action();
            let mut forms = [[0; 4]; 4];
            for (i, row) in forms.iter_mut().enumerate() {
                row.copy_from_slice(w.row(i));
            }
            SymbolicVector { forms }
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatticeKind {
    A3Root,
    A3Weight,
    A4Root,
    A4Weight,
}

impl LatticeKind {
    pub fn diagram(self) -> Diagram {
        match self {
            LatticeKind::A3Root | LatticeKind::A3Weight => Diagram::A3,
            LatticeKind::A4Root | LatticeKind::A4Weight => Diagram::A4,
        }
    }

    pub fn basis(self) -> Basis {
        match self {
            LatticeKind::A3Root | LatticeKind::A4Root => Basis::Root,
            LatticeKind::A3Weight | LatticeKind::A4Weight => Basis::Weight,
        }
    }
}

fn fundamental_orbits(d: Diagram) -> Vec<LatticeVector> {
    (0..d.rank()).flat_map(|i| orbit_unchecked(&LatticeVector::unit(d, Basis::Weight, i).expect("in range"))).collect()
}

/// Vertices of the Voronoi cell around the origin, in weight coordinates.
///
/// Root lattices: the union of the fundamental-weight orbits. Weight
/// lattices: the orbit of `ρ/(n+1)`, `ρ = (1,…,1)`; the unscaled orbit of ρ
/// consists of lattice points, while `ρ/(n+1)` is equidistant from `n+1` of
/// them.
pub fn voronoi_vertices(lattice: LatticeKind) -> Vec<LatticeVector> {
    let d = lattice.diagram();
    match lattice.basis() {
        Basis::Root => fundamental_orbits(d),
        Basis::Weight => {
            let n = d.rank();
            let rho = LatticeVector::new(d, Basis::Weight, vec![Rational::new(1.into(), ((n + 1) as i64).into()); n])
                .expect("rank matches");
            orbit_unchecked(&rho)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DualPolytope {
    /// Dual of the A4 weight-lattice Voronoi cell `(1,1,1,1)`.
    A4WeightVoronoi,
    /// Tetrakis hexahedron, dual of the truncated octahedron `(1,1,1)`.
    A3TruncatedOctahedron,
    /// Dual of `(0,1,1,0)`: two 5-cells.
    A4_0110,
}

/// Vertices of the dual polytope as unions of scaled orbits.
pub fn dual_vertices(polytope: DualPolytope) -> Vec<LatticeVector> {
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    let (diagram, parts): (Diagram, Vec<(usize, Rational)>) = match polytope {
        DualPolytope::A4WeightVoronoi => (Diagram::A4, vec![(0, r(1, 1)), (1, r(2, 3)), (2, r(2, 3)), (3, r(1, 1))]),
        DualPolytope::A3TruncatedOctahedron => (Diagram::A3, vec![(0, r(1, 1)), (1, r(3, 4)), (2, r(1, 1))]),
        DualPolytope::A4_0110 => (Diagram::A4, vec![(0, r(1, 1)), (3, r(1, 1))]),
    };
    parts
        .into_iter()
        .flat_map(|(i, k)| {
            let w = LatticeVector::unit(diagram, Basis::Weight, i).expect("in range");
            orbit_unchecked(&w.scale(&k))
        })
        .collect()
}

/// Highest root `α_H = α_1 + … + α_n` in root coordinates.
pub fn highest_root(diagram: Diagram) -> Result<LatticeVector> {
    LatticeVector::new(diagram, Basis::Root, vec![Rational::one(); diagram.rank()])
}

/// `v + α_H`, in `v`'s basis.
pub fn affine_translate(v: &LatticeVector) -> Result<LatticeVector> {
    v.checked_add(&highest_root(v.diagram())?)
}

/// `v − α_H`, in `v`'s basis.
pub fn affine_translate_inverse(v: &LatticeVector) -> Result<LatticeVector> {
    v.checked_sub(&highest_root(v.diagram())?)
}

/// The 24 units of the binary tetrahedral group `T`.
pub fn binary_tetrahedral() -> Vec<GoldenQuaternion> {
    let mut out = Vec::with_capacity(24);
    for i in 0..4 {
        out.push(GoldenQuaternion::unit(i));
        out.push(-GoldenQuaternion::unit(i));
    }
    for signs in 0..16u32 {
        let s = |k: u32| if signs >> k & 1 == 1 { -1 } else { 1 };
        out.push(GoldenQuaternion::from_ints(s(0), s(1), s(2), s(3)).half());
    }
    out.sort();
    out
}

/// `√2·T′`: the 24 quaternions with two nonzero components, each ±1.
pub fn scaled_octahedral_coset() -> Vec<GoldenQuaternion> {
    let mut out = Vec::with_capacity(24);
    for i in 0..4 {
        for j in i + 1..4 {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut c = [0i64; 4];
                c[i] = si;
                c[j] = sj;
                out.push(GoldenQuaternion::from_ints(c[0], c[1], c[2], c[3]));
            }
        }
    }
    out.sort();
    out
}

/// W(A3) presentation: `[p, p̄]` with `p ∈ T`, or `[t, t̄]*` with `t ∈ T′`.
pub fn satisfies_a3_presentation(element: &WeylElement) -> bool {
    let pair = element.scaled_pair();
    if *pair.q() != pair.p().conjugate() {
        return false;
    }
    match (pair.kind(), pair.is_scaled()) {
        (ActionKind::Plain, false) => binary_tetrahedral().binary_search(pair.p()).is_ok(),
        (ActionKind::Star, true) => scaled_octahedral_coset().binary_search(pair.p()).is_ok(),
        _ => false,
    }
}

/// Pyritohedral subgroup of Aut(A3) on quaternion coordinates: `[p, p̄]` and
/// `[p, p̄]*` with `p ∈ T`.
pub fn is_pyritohedral(element: &WeylElement) -> bool {
    let pair = element.scaled_pair();
    !pair.is_scaled() && *pair.q() == pair.p().conjugate() && binary_tetrahedral().binary_search(pair.p()).is_ok()
}

/// `d = e2 − e3`, twice the quaternion `c` of the A4 presentation.
pub fn a4_presentation_quaternion() -> GoldenQuaternion {
    GoldenQuaternion::from_ints(0, 0, 1, -1)
}

/// W(A4) presentation: `q = −½ d p̃ d` for plain elements and `q = +½ d p̃ d`
/// for star elements, where `p̃` is the golden conjugate of `p̄`.
pub fn satisfies_a4_presentation(element: &WeylElement) -> bool {
    let pair = element.scaled_pair();
    if pair.is_scaled() {
        return false;
    }
    let d = a4_presentation_quaternion();
    let pt = pair.p().conjugate().golden_conjugate();
    let rhs = (&(&d * &pt) * &d).half();
    match pair.kind() {
        ActionKind::Plain => *pair.q() == -rhs,
        ActionKind::Star => *pair.q() == rhs,
    }
}

/// `{±p}` over the given elements, sorted and deduplicated.
pub fn signed_first_components(elements: &[WeylElement]) -> Vec<GoldenQuaternion> {
    let set: BTreeSet<GoldenQuaternion> = elements
        .iter()
        .flat_map(|e| {
            let p = e.scaled_pair().p().clone();
            [-&p, p]
        })
        .collect();
    set.into_iter().collect()
}

/// Every product of two members is again a member.
pub fn is_multiplication_closed(set: &[GoldenQuaternion]) -> bool {
    let lookup: BTreeSet<&GoldenQuaternion> = set.iter().collect();
    set.iter().all(|a| set.iter().all(|b| lookup.contains(&(a * b))))
}

/// Orbit sizes keyed by highest weight, for a list of dominant weights.
pub fn orbit_sizes(weights: &[LatticeVector]) -> Result<BTreeMap<Vec<Rational>, usize>> {
    weights.iter().map(|w| Ok((w.to_weight().coords().to_vec(), orbit(w)?.len()))).collect()
}

/// Human-readable form of a weight-coordinate row, e.g. `a1-a3`.
pub fn format_form(row: &[i64; 4]) -> String {
    let mut s = String::new();
    write_form(&mut s, row).expect("writing to a String cannot fail");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::embed_quaternion;

    fn w(d: Diagram, a: &[i64]) -> LatticeVector {
        LatticeVector::from_ints(d, Basis::Weight, a).unwrap()
    }

    #[test]
    fn group_orders() {
        let orders: Vec<usize> = GroupKind::ALL.iter().map(|&k| generate_group(k).len()).collect();
        assert_eq!(orders, vec![24, 48, 120, 240, 10]);
    }

    #[test]
    fn coxeter_relations() {
        for d in [Diagram::A3, Diagram::A4] {
            let gens: Vec<WeylElement> = (0..d.rank()).map(|i| reflection_element(d, i).unwrap()).collect();
            for i in 0..d.rank() {
                for j in 0..d.rank() {
                    let m = match i.abs_diff(j) {
                        0 => 1,
                        1 => 3,
                        _ => 2,
                    };
                    let rr = gens[i].then(&gens[j]);
                    let mut acc = WeylElement::identity(d.rank());
                    for _ in 0..m {
                        acc = acc.then(&rr);
                    }
                    assert!(acc.is_identity(), "{d} r{i} r{j}");
                    assert!(acc.matrix().is_identity(), "{d} r{i} r{j} quaternion");
                }
            }
        }
    }

    #[test]
    fn representations_agree() {
        for kind in GroupKind::ALL {
            let d = kind.diagram();
            for g in generate_group(kind) {
                assert!(g.is_orthogonal());
                assert!(g.preserves_weight_form(d));
                for i in 0..d.rank() {
                    let wi = LatticeVector::unit(d, Basis::Weight, i).unwrap();
                    let lhs = embed_quaternion(&g.apply_vector(&wi)).unwrap();
                    let rhs = g.apply_quaternion(&embed_quaternion(&wi).unwrap());
                    assert_eq!(lhs, rhs, "{kind}");
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let d = Diagram::A4;
        assert_eq!(orbit(&w(d, &[1, 0, 0, 0])).unwrap().len(), 5);
        assert_eq!(orbit(&w(d, &[0, 0, 0, 0])).unwrap().len(), 1);
        assert_eq!(orbit(&w(d, &[1, 0, 0, 1])).unwrap().len(), 20);
        assert_eq!(orbit(&w(d, &[0, 1, 1, 0])).unwrap().len(), 30);
        assert_eq!(orbit(&w(d, &[1, 1, 1, 1])).unwrap().len(), 120);
        assert_eq!(orbit(&w(d, &[1, -1, 0, 0])), Err(Error::NegativeCoordinate { index: 1 }));
    }

    #[test]
    fn a3_roots_are_the_cuboctahedron() {
        let roots = orbit(&w(Diagram::A3, &[1, 0, 1])).unwrap();
        let mut quats: Vec<GoldenQuaternion> = roots.iter().map(|r| embed_quaternion(r).unwrap()).collect();
        quats.sort();
        let mut expected = Vec::new();
        for i in 1..4 {
            for j in i + 1..4 {
                for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let mut c = [0; 4];
                    c[i] = si;
                    c[j] = sj;
                    expected.push(GoldenQuaternion::from_ints(c[0], c[1], c[2], c[3]));
                }
            }
        }
        expected.sort();
        assert_eq!(quats, expected);
    }

    #[test]
    fn orbits_preserve_norm() {
        let hw = w(Diagram::A4, &[2, 0, 1, 3]);
        let n = hw.norm_squared();
        assert!(orbit(&hw).unwrap().iter().all(|v| v.norm_squared() == n));
    }

    #[test]
    fn symbolic_spot_checks() {
        let orbit = symbolic_orbit();
        assert_eq!(orbit.len(), 120);
        let rows = [["a1", "a2", "a3", "a4"], ["a2+a3+a4", "-a4", "-a1-a2-a3", "a1+a2"], ["-a4", "-a3", "-a2", "-a1"]];
        for r in rows {
            let v = SymbolicVector::parse(&r).unwrap();
            assert!(orbit.binary_search(&v).is_ok(), "{v}");
        }
        assert_eq!(SymbolicVector::parse(&["a1", "a2", "a3", "a4"]).unwrap(), SymbolicVector::identity());
    }

    #[test]
    fn form_round_trip() {
        for row in [[1, 1, 1, 1], [0, -1, 0, 0], [-1, 0, 2, 0], [0, 0, 0, 0]] {
            let s = format_form(&row);
            if row != [0; 4] {
                assert_eq!(SymbolicVector::parse_form(&s), Some(row), "{s}");
            }
        }
        assert_eq!(SymbolicVector::parse_form("$-a_1-a_2$"), Some([-1, -1, 0, 0]));
        assert_eq!(SymbolicVector::parse_form("b1"), None);
    }

    #[test]
    fn voronoi_counts() {
        assert_eq!(voronoi_vertices(LatticeKind::A3Root).len(), 14);
        assert_eq!(voronoi_vertices(LatticeKind::A3Weight).len(), 24);
        assert_eq!(voronoi_vertices(LatticeKind::A4Root).len(), 30);
        assert_eq!(voronoi_vertices(LatticeKind::A4Weight).len(), 120);
        assert_eq!(dual_vertices(DualPolytope::A4WeightVoronoi).len(), 30);
        assert_eq!(dual_vertices(DualPolytope::A3TruncatedOctahedron).len(), 14);
        assert_eq!(dual_vertices(DualPolytope::A4_0110).len(), 10);
    }

    #[test]
    fn weight_voronoi_vertex_is_equidistant() {
        // ρ/5 is at squared distance 2/5 from 0 and from ω1, ..., and no lattice point is closer.
        let d = Diagram::A4;
        let v = &voronoi_vertices(LatticeKind::A4Weight)[0];
        let n0 = v.norm_squared();
        assert_eq!(n0, Rational::new(2.into(), 5.into()));
        let mut closest = 0;
        for a in -2..=2i64 {
            for b in -2..=2i64 {
                for c in -2..=2i64 {
                    for e in -2..=2i64 {
                        let p = w(d, &[a, b, c, e]);
                        let dist = (v - &p).norm_squared();
                        assert!(dist >= n0);
                        closest += (dist == n0) as usize;
                    }
                }
            }
        }
        assert_eq!(closest, 5);
    }

    #[test]
    fn affine_translation() {
        let z = LatticeVector::zero(Diagram::A4, Basis::Weight).unwrap();
        assert_eq!(affine_translate(&z).unwrap(), w(Diagram::A4, &[1, 0, 0, 1]));
        let v = w(Diagram::A4, &[3, -1, 2, 0]);
        assert_eq!(affine_translate_inverse(&affine_translate(&v).unwrap()).unwrap(), v);
        let z3 = LatticeVector::zero(Diagram::A3, Basis::Root).unwrap();
        assert_eq!(
            affine_translate(&z3).unwrap(),
            LatticeVector::from_ints(Diagram::A3, Basis::Root, &[1, 1, 1]).unwrap()
        );
    }

    #[test]
    fn a3_presentation() {
        let g = generate_group(GroupKind::WA3);
        assert!(g.iter().all(satisfies_a3_presentation));
        assert_eq!(g.iter().filter(|e| e.kind() == ActionKind::Plain).count(), 12);
        let aut = generate_group(GroupKind::AutA3);
        assert_eq!(aut.iter().filter(|e| is_pyritohedral(e)).count(), 24);
    }

    #[test]
    fn a4_presentation() {
        let g = generate_group(GroupKind::WA4);
        assert!(g.iter().all(satisfies_a4_presentation));
        let ps = signed_first_components(&g);
        assert_eq!(ps.len(), 120);
        assert!(ps.iter().all(|p| p.norm_squared().is_one()));
        assert!(is_multiplication_closed(&ps));
    }

    #[test]
    fn a4_automorphism_swaps_roots() {
        let gamma = a4_diagram_automorphism();
        let roots = simple_roots_quaternion(Diagram::A4).unwrap();
        for i in 0..4 {
            assert_eq!(gamma.apply_quaternion(&roots[i]), roots[3 - i]);
        }
    }
}
