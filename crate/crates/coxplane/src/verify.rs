//! The invariant registry behind `coxplane verify`.
//!
//! Each check returns one or more statements with the exact values involved.
//! Random samples come from a ChaCha stream seeded by the check id, so a
//! report does not depend on which suites run alongside it.

use std::fmt::{self, Write as _};

use coxplane_core::coxeter::{
    cartan_inverse, cartan_matrix, convert_basis, coxeter_plane_frame, embed_quaternion,
    fundamental_weights_quaternion, quaternion_scale, simple_roots_quaternion, GoldenFrame,
};
use coxplane_core::projection::{
    debruijn_vertices, dihedral_generators, hypercube_decompose, par_squared_norm, perp_squared_norm, planar_action,
    project, project_parallel, project_root_coords, pythagoras_defect, root_coordinate_functionals, twice_cos_fifths,
};
use coxplane_core::quasilattice::{
    brute_force_accept, golden_radius, ring_base, ring_counts, slab_project, strip_accept, strip_project,
    window_from_voronoi, StripConfig, StripLattice, StripPlan, Window,
};
use coxplane_core::quaternion::{apply_element, golden_conjugate_quat, reflect_through_root};
use coxplane_core::weyl::{
    a4_diagram_automorphism, affine_translate, affine_translate_inverse, dual_vertices, generate_group, generators,
    is_multiplication_closed, is_pyritohedral, orbit, satisfies_a3_presentation, satisfies_a4_presentation,
    signed_first_components, symbolic_orbit, voronoi_vertices, DualPolytope, LatticeKind, SymbolicVector,
};
use coxplane_core::{
    ActionKind, Basis, Diagram, ElementPair, Error, GoldenQuaternion, GoldenRational, GroupKind, LatticeVector, Matrix,
    Plane, PointSet2D, Rational, Sign, WeylElement,
};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::SvgStyle;
use crate::emit::{from_json, render, to_json, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Golden,
    Quaternion,
    Coxeter,
    Group,
    Projection,
    Quasilattice,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Golden => "golden",
            Suite::Quaternion => "quaternion",
            Suite::Coxeter => "coxeter",
            Suite::Group => "group",
            Suite::Projection => "projection",
            Suite::Quasilattice => "quasilattice",
            Suite::All => "all",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

/// Statements produced by one check.
#[derive(Debug, Default)]
pub struct Outcome {
    pub statements: Vec<(String, bool)>,
}

impl Outcome {
    fn claim(&mut self, ok: bool, text: impl Into<String>) -> &mut Self {
        self.statements.push((text.into(), ok));
        self
    }

    fn passed(&self) -> bool {
        !self.statements.is_empty() && self.statements.iter().all(|(_, ok)| *ok)
    }
}

pub struct Check {
    pub id: &'static str,
    pub suite: Suite,
    run: fn(&mut ChaCha8Rng, &mut Outcome),
}

impl Check {
    pub fn run(&self) -> Outcome {
        let mut out = Outcome::default();
        (self.run)(&mut rng_for(self.id), &mut out);
        out
    }
}

fn rng_for(id: &str) -> ChaCha8Rng {
    // FNV-1a, so seeds are stable across platforms and releases.
    let seed = id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
    ChaCha8Rng::seed_from_u64(seed)
}

pub struct Report {
    pub checks: Vec<(&'static str, Outcome)>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|(_, o)| !o.passed()).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut statements = 0;
        for (id, o) in &self.checks {
            if o.statements.is_empty() {
                writeln!(f, "{id}: no statements FAIL")?;
            }
            for (text, ok) in &o.statements {
                statements += 1;
                writeln!(f, "{id}: {text} {}", if *ok { "PASS" } else { "FAIL" })?;
            }
        }
        writeln!(f, "{} checks, {statements} statements, {} failed", self.checks.len(), self.failures())
    }
}

pub fn run(suite: Suite) -> Report {
    let checks = registry().iter().filter(|c| suite.includes(c.suite)).map(|c| (c.id, c.run())).collect();
    Report { checks }
}

// ---------------------------------------------------------------------------
// Sampling helpers

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn g(a: i64, b: i64) -> GoldenRational {
    GoldenRational::from_ints(a, b)
}

fn gf(an: i64, ad: i64, bn: i64, bd: i64) -> GoldenRational {
    GoldenRational::from_fractions(an, ad, bn, bd)
}

fn random_golden(rng: &mut ChaCha8Rng) -> GoldenRational {
    GoldenRational::new(
        q(rng.gen_range(-40..=40), rng.gen_range(1..=12)),
        q(rng.gen_range(-40..=40), rng.gen_range(1..=12)),
    )
}

fn random_quaternion(rng: &mut ChaCha8Rng) -> GoldenQuaternion {
    GoldenQuaternion::from_array(std::array::from_fn(|_| random_golden(rng)))
}

fn random_ints(rng: &mut ChaCha8Rng, n: usize, r: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-r..=r)).collect()
}

fn weight(d: Diagram, a: &[i64]) -> LatticeVector {
    LatticeVector::from_ints(d, Basis::Weight, a).expect("valid coordinates")
}

fn a4(a: &[i64]) -> LatticeVector {
    weight(Diagram::A4, a)
}

fn count_ok(n: usize, mut f: impl FnMut() -> bool) -> usize {
    (0..n).filter(|_| f()).count()
}

fn golden_matrix(m: &Matrix<Rational>) -> Matrix<GoldenRational> {
    m.map(|x| GoldenRational::from_rational(x.clone()))
}

// ---------------------------------------------------------------------------
// golden

fn golden_canonical(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = 10_000;
    let ok = count_ok(n, || {
        let x = random_golden(rng);
        let k: i64 = rng.gen_range(2..=9);
        let scaled = GoldenRational::new(
            Rational::new(x.a().numer() * k, x.a().denom() * k),
            Rational::new(x.b().numer() * k, x.b().denom() * k),
        );
        let lowest = |r: &Rational| {
            r.denom().is_positive() && Rational::new(r.numer().clone(), r.denom().clone()).numer() == r.numer()
        };
        scaled == x && lowest(scaled.a()) && lowest(scaled.b())
    });
    o.claim(ok == n, format!("lowest terms, positive denominators, equality iff equal pairs on {ok}/{n} samples"));
}

fn golden_examples(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let t = GoldenRational::tau();
    let s5 = g(-1, 2);
    o.claim(&t * &t == g(1, 1), format!("τ·τ = {}", &t * &t));
    o.claim(&s5 * &s5 == g(5, 0), format!("(−1+2τ)² = {}", &s5 * &s5));
    o.claim(t.inverse().ok() == Some(g(-1, 1)), format!("1/τ = {}", t.inverse().unwrap()));
    o.claim(GoldenRational::zero().inverse() == Err(Error::DivisionByZero), "1/0 is a division-by-zero error");
    o.claim(t.conjugate() == g(1, -1), format!("conj(τ) = {}", t.conjugate()));
    o.claim(s5.conjugate() == g(1, -2), format!("conj(−1+2τ) = {}", s5.conjugate()));
    o.claim(s5.sign() == Sign::Positive && g(1, -1).sign() == Sign::Negative, "sign(−1+2τ) = +, sign(1−τ) = −");
    o.claim(g(3, -2).sign() == Sign::Negative, "sign(3−2τ) = −");
    o.claim(t.to_f64() == 1.618_033_988_749_895, format!("to_float(τ) = {}", t.to_f64()));
    o.claim(GoldenRational::zero().to_f64() == 0.0, "to_float(0) = 0");
    o.claim(g(2, -1).to_f64() == 0.381_966_011_250_105_15, format!("to_float(2−τ) = {}", g(2, -1).to_f64()));
}

fn golden_field_axioms(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = 10_000;
    let (mut assoc, mut dist, mut inv) = (0, 0, 0);
    for _ in 0..n {
        let (x, y, z) = (random_golden(rng), random_golden(rng), random_golden(rng));
        assoc += (&(&x * &y) * &z == &x * &(&y * &z) && &(&x + &y) + &z == &x + &(&y + &z)) as usize;
        dist += (&x * &(&y + &z) == &(&x * &y) + &(&x * &z)) as usize;
        inv += match x.inverse() {
            Ok(xi) => (&x * &xi).is_one() as usize,
            Err(_) => x.is_zero() as usize,
        };
    }
    o.claim(assoc == n, format!("associativity on {assoc}/{n} triples"));
    o.claim(dist == n, format!("distributivity on {dist}/{n} triples"));
    o.claim(inv == n, format!("x·x⁻¹ = 1 on {inv}/{n} samples"));
}

fn golden_conjugation(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = 10_000;
    let ok = count_ok(n, || {
        let (x, y) = (random_golden(rng), random_golden(rng));
        (&x * &y).conjugate() == &x.conjugate() * &y.conjugate()
            && (&x + &y).conjugate() == &x.conjugate() + &y.conjugate()
            && x.conjugate().conjugate() == x
    });
    o.claim(ok == n, format!("conj is an involutive ring homomorphism on {ok}/{n} pairs"));
}

fn golden_sign(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = 10_000;
    let mut compared = 0;
    let ok = count_ok(n, || {
        // Mix in near-cancelling values a + bτ with a ≈ −bτ.
        let x = if rng.gen_bool(0.5) {
            random_golden(rng)
        } else {
            let b: i64 = rng.gen_range(-10_000..=10_000);
            let a = -(b as f64 * coxplane_core::golden::TAU_F64).round() as i64 + rng.gen_range(-1..=1);
            g(a, b)
        };
        let f = x.to_f64();
        if f.abs() <= 1e-6 {
            return true;
        }
        compared += 1;
        let s = x.sign();
        (f > 0.0 && s == Sign::Positive) || (f < 0.0 && s == Sign::Negative)
    });
    o.claim(ok == n, format!("sign agrees with to_float on {ok}/{n} samples ({compared} with |x| > 1e-6)"));
}

fn golden_norm(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = 10_000;
    let ok = count_ok(n, || {
        let (x, y) = (random_golden(rng), random_golden(rng));
        (&x * &y).norm() == x.norm() * y.norm()
    });
    o.claim(ok == n, format!("N(xy) = N(x)N(y) on {ok}/{n} pairs"));
}

// ---------------------------------------------------------------------------
// quaternion

fn quaternion_examples(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let e = GoldenQuaternion::unit;
    o.claim(&e(1) * &e(2) == e(3), "e1·e2 = e3");
    let h = GoldenQuaternion::from_ints(1, 1, 1, 1).half();
    let hh = &h * &h;
    o.claim(hh == GoldenQuaternion::from_ints(-1, 1, 1, 1).half(), format!("h·h = {hh}"));
    let roots = simple_roots_quaternion(Diagram::A4).expect("A4");
    let weights = fundamental_weights_quaternion(Diagram::A4).expect("A4");
    o.claim(roots[1].scalar_product(&roots[3]).is_zero(), "(α2, α4) = 0 for stored A4 roots");
    let a = &roots[0];
    o.claim(reflect_through_root(a, a).ok() == Some(-a), "reflect(α, α) = −α");
    let r12 = reflect_through_root(&roots[0], &roots[1]).expect("nonzero root");
    o.claim(r12 == &roots[0] + &roots[1], format!("reflect(α1, α2) = α1 + α2 = {r12}"));
    o.claim(reflect_through_root(&roots[0], &weights[1]).ok().as_ref() == Some(&weights[1]), "reflect(α1, ω2) = ω2");
    o.claim(
        reflect_through_root(&GoldenQuaternion::zero(), a) == Err(Error::ZeroRoot),
        "reflect through 0 is an error",
    );
    let one = GoldenQuaternion::one();
    o.claim(apply_element(&one, &one, ActionKind::Plain, &e(2)) == e(2), "[1,1] λ = λ");
    o.claim(apply_element(&one, &-&one, ActionKind::Star, &e(2)) == e(2), "[1,−1]* e2 = e2");
    o.claim(apply_element(&one, &-&one, ActionKind::Star, a) == -a, "[1,−1]* α1 = −α1");
    let t = GoldenRational::tau;
    let s = GoldenRational::sigma;
    let a4c = golden_conjugate_quat(&roots[3]);
    let expected = GoldenQuaternion::new(GoldenRational::zero(), GoldenRational::one(), -t(), -s());
    o.claim(a4c == expected, format!("gconj(α4) = {a4c}"));
    o.claim(golden_conjugate_quat(&e(1)) == e(1), "gconj(e1) = e1");
}

fn quaternion_norm(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = 10_000;
    let ok = count_ok(n, || {
        let (p, r) = (random_quaternion(rng), random_quaternion(rng));
        (&p * &r).norm_squared() == p.norm_squared() * r.norm_squared()
    });
    o.claim(ok == n, format!("(pq, pq) = (p,p)(q,q) on {ok}/{n} pairs"));
}

fn quaternion_reflection(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = 1_000;
    let ok = count_ok(n, || {
        let (a, x, y) = (random_quaternion(rng), random_quaternion(rng), random_quaternion(rng));
        if a.is_zero() {
            return true;
        }
        let rx = reflect_through_root(&a, &x).expect("nonzero");
        let ry = reflect_through_root(&a, &y).expect("nonzero");
        reflect_through_root(&a, &rx).expect("nonzero") == x && rx.scalar_product(&ry) == x.scalar_product(&y)
    });
    o.claim(ok == n, format!("reflection is an involution preserving (·,·) on {ok}/{n} cases"));
}

fn quaternion_composition(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = 1_000;
    let kinds = [ActionKind::Plain, ActionKind::Star];
    let mut star_star_plain = true;
    let ok = count_ok(n, || {
        let k1 = kinds[rng.gen_range(0..2)];
        let k2 = kinds[rng.gen_range(0..2)];
        let first = ElementPair::new(random_quaternion(rng), random_quaternion(rng), k1);
        let second = ElementPair::new(random_quaternion(rng), random_quaternion(rng), k2);
        let both = first.then(&second);
        if k1 == ActionKind::Star && k2 == ActionKind::Star {
            star_star_plain &= both.kind() == ActionKind::Plain;
        }
        (0..4).all(|j| {
            let e = GoldenQuaternion::unit(j);
            both.apply(&e) == second.apply(&first.apply(&e))
        })
    });
    o.claim(ok == n, format!("[p,q] then [r,s] acts as the composed pair on {ok}/{n} samples"));
    o.claim(star_star_plain, "star then star composes to plain");
}

fn quaternion_conjugation(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = 1_000;
    let ok = count_ok(n, || {
        let (p, r) = (random_quaternion(rng), random_quaternion(rng));
        (&p * &r).conjugate() == &r.conjugate() * &p.conjugate()
    });
    o.claim(ok == n, format!("conj(pq) = conj(q)conj(p) on {ok}/{n} pairs"));
}

fn quaternion_canonical(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = 1_000;
    let ok = count_ok(n, || {
        let (p, r) = (random_quaternion(rng), random_quaternion(rng));
        let a = ElementPair::new(p.clone(), r.clone(), ActionKind::Star);
        let b = ElementPair::new(-&p, -&r, ActionKind::Star);
        a == b && a.p().leading_sign() != Sign::Negative
    });
    o.claim(ok == n, format!("[p,q] and [−p,−q] share one canonical form on {ok}/{n} samples"));
}

// ---------------------------------------------------------------------------
// coxeter

fn coxeter_cartan(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let ci4 = cartan_inverse(Diagram::A4).expect("A4");
    let expected4 = [[4, 3, 2, 1], [3, 6, 4, 2], [2, 4, 6, 3], [1, 2, 3, 4]];
    let ok4 = (0..4).all(|i| (0..4).all(|j| *ci4.get(i, j) == q(expected4[i][j], 5)));
    o.claim(ok4, "C⁻¹(A4) = (1/5)[[4,3,2,1],[3,6,4,2],[2,4,6,3],[1,2,3,4]]");
    let ci3 = cartan_inverse(Diagram::A3).expect("A3");
    let expected3 = [[3, 2, 1], [2, 4, 2], [1, 2, 3]];
    let ok3 = (0..3).all(|i| (0..3).all(|j| *ci3.get(i, j) == q(expected3[i][j], 4)));
    o.claim(ok3, "C⁻¹(A3) = (1/4)[[3,2,1],[2,4,2],[1,2,3]]");
    for n in 1..=5 {
        let d = Diagram::a(n).expect("rank in range");
        let c = cartan_matrix(d).expect("A_n");
        let id = &c * &cartan_inverse(d).expect("A_n");
        o.claim(id.is_identity(), format!("C·C⁻¹ = I for {d}"));
    }
    o.claim(cartan_matrix(Diagram::H2).is_err(), "H2 has no rational Cartan matrix");
}

fn coxeter_numbers(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let ok = (1..=5).all(|n| Diagram::a(n).expect("rank in range").coxeter_number() == n + 1);
    o.claim(ok, "h(A_n) = n + 1 for n = 1..5");
    o.claim(Diagram::H2.coxeter_number() == 5, "h(H2) = 5");
}

fn coxeter_conversion(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let hr = LatticeVector::from_ints(Diagram::A4, Basis::Root, &[1, 1, 1, 1]).expect("A4");
    let hw = convert_basis(&hr, Basis::Weight);
    o.claim(hw == a4(&[1, 0, 0, 1]), format!("root (1,1,1,1) = weight {hw}"));
    let w1 = convert_basis(&a4(&[1, 0, 0, 0]), Basis::Root);
    o.claim(w1.coords() == [q(4, 5), q(3, 5), q(2, 5), q(1, 5)], format!("weight (1,0,0,0) = root {w1}"));
    let z = LatticeVector::zero(Diagram::A4, Basis::Root).expect("A4");
    o.claim(convert_basis(&z, Basis::Weight).is_zero(), "zero converts to zero");
}

fn coxeter_round_trip(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = 10_000;
    let ok = count_ok(n, || {
        let d = if rng.gen_bool(0.5) { Diagram::A3 } else { Diagram::A4 };
        let basis = if rng.gen_bool(0.5) { Basis::Root } else { Basis::Weight };
        let v = LatticeVector::from_ints(d, basis, &random_ints(rng, d.rank(), 50)).expect("valid");
        let other = if basis == Basis::Root { Basis::Weight } else { Basis::Root };
        let w = convert_basis(&v, other);
        convert_basis(&w, basis) == v && w.norm_squared() == v.norm_squared()
    });
    o.claim(ok == n, format!("root/weight round trip is the identity and keeps the norm on {ok}/{n} vectors"));
}

fn coxeter_embedding(_: &mut ChaCha8Rng, o: &mut Outcome) {
    for d in [Diagram::A3, Diagram::A4] {
        let s = GoldenRational::from_rational(quaternion_scale(d).expect("A3/A4"));
        let mut ok = true;
        for i in 0..d.rank() {
            for j in 0..d.rank() {
                for (bi, bj) in
                    [(Basis::Weight, Basis::Weight), (Basis::Root, Basis::Weight), (Basis::Root, Basis::Root)]
                {
                    let u = LatticeVector::unit(d, bi, i).expect("rank");
                    let v = LatticeVector::unit(d, bj, j).expect("rank");
                    let quat = &s
                        * &embed_quaternion(&u).expect("A3/A4").scalar_product(&embed_quaternion(&v).expect("A3/A4"));
                    let cartan = u.to_root().inner_product(&v.to_weight()).expect("same diagram");
                    ok &= quat == GoldenRational::from_rational(cartan);
                }
            }
        }
        o.claim(ok, format!("s·(embed u, embed v) = Cartan form for all simple roots and weights of {d}"));
    }
    let a1 = embed_quaternion(&LatticeVector::unit(Diagram::A4, Basis::Root, 0).expect("A4")).expect("A4");
    o.claim(a1 == GoldenQuaternion::from_ints(-2, 0, 0, 0), format!("stored α1 = {a1}"));
    let w1 = embed_quaternion(&weight(Diagram::A3, &[1, 0, 0])).expect("A3");
    o.claim(w1 == GoldenQuaternion::from_ints(0, 1, 1, 1).half(), format!("A3 ω1 = {w1}"));
    let w14 = embed_quaternion(&a4(&[1, 0, 0, 0])).expect("A4");
    let expected = GoldenQuaternion::new(g(-1, 0), GoldenRational::zero(), gf(2, 5, 1, 5), gf(3, 5, -1, 5));
    o.claim(w14 == expected, format!("stored A4 ω1 = {w14}"));
}

fn coxeter_frame(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let f = GoldenFrame::a4();
    let mut ok = true;
    for (i, u) in f.axes.iter().enumerate() {
        for (j, v) in f.axes.iter().enumerate() {
            let e = GoldenFrame::normalized_inner(u, v);
            ok &= e == Some(GoldenRational::from_integer((i == j) as i64));
        }
    }
    o.claim(ok, "x̂, ŷ, ẑ, ŵ are orthonormal under the Cartan form");
}

fn coxeter_eigenvector(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let f = GoldenFrame::a4();
    let c = golden_matrix(&cartan_matrix(Diagram::A4).expect("A4"));
    let two_i = Matrix::identity(4).map(|x: &GoldenRational| x + x);
    let lhs = (&two_i - &c).apply(&f.eigenvector);
    let rhs: Vec<GoldenRational> = f.eigenvector.iter().map(|x| x * &f.c).collect();
    o.claim(lhs == rhs && f.c == GoldenRational::tau(), "(2I − C)x = τx for x = (1, τ, τ, 1)");
    let a2 = coxeter_plane_frame(Diagram::a(2).expect("A2")).expect("A2");
    let ok = (a2.c - 1.0).abs() < 1e-15 && a2.eigenvector.iter().all(|x| (x - 1.0).abs() < 1e-15);
    o.claim(ok, format!("A2: c = {}, x = {:?}", a2.c, a2.eigenvector));
}

fn coxeter_normalization(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let f = GoldenFrame::a4();
    let x = &f.eigenvector;
    let odd = &x[0].square() + &x[2].square();
    let even = &x[1].square() + &x[3].square();
    let ok = odd == f.eigenvector_norm_squared && even == f.eigenvector_norm_squared;
    o.claim(ok, format!("Σ_odd x_i² = Σ_even x_i² = 1 after dividing by {}", f.eigenvector_norm_squared));
}

fn coxeter_betas(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let f = GoldenFrame::a4();
    let ip = |i: usize, j: usize| {
        let e = GoldenFrame::normalized_inner(&f.betas[i], &f.betas[j]).expect("same normalizer or orthogonal");
        &e + &e
    };
    let two = GoldenRational::from_integer(2);
    o.claim(ip(0, 0) == two && ip(1, 1) == two && ip(2, 2) == two && ip(3, 3) == two, "(β_i, β_i) = 2");
    o.claim(ip(0, 1) == -GoldenRational::tau(), format!("(β1, β2) = {}", ip(0, 1)));
    o.claim(ip(2, 3) == -GoldenRational::sigma(), format!("(β3, β4) = {}", ip(2, 3)));
    let cross = (0..2)
        .all(|i| (2..4).all(|j| GoldenFrame::normalized_inner(&f.betas[i], &f.betas[j]).is_some_and(|v| v.is_zero())));
    o.claim(cross, "(β_i, β_j) = 0 across the two planes");
}

fn coxeter_block(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let m = coxplane_core::coxeter::block_diagonalize_check(Diagram::A4).expect("A4");
    let t = GoldenRational::tau();
    let s = GoldenRational::sigma();
    let two = GoldenRational::from_integer(2);
    let z = GoldenRational::zero();
    let expected = Matrix::from_rows(vec![
        vec![two.clone(), -&t, z.clone(), z.clone()],
        vec![-&t, two.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), two.clone(), -&s],
        vec![z.clone(), z.clone(), -&s, two],
    ])
    .expect("square");
    o.claim(m == expected, format!("X C Xᵀ = {m}"));
    let conj = (0..2).all(|i| (0..2).all(|j| m.get(i, j).conjugate() == *m.get(i + 2, j + 2)));
    o.claim(conj, "golden conjugate of the upper block is the lower block");
    o.claim(coxplane_core::coxeter::block_diagonalize_check(Diagram::A3).is_err(), "A3 is rejected");
}

fn coxeter_axis_normalizers(_: &mut ChaCha8Rng, o: &mut Outcome) {
    // |β1 − β2|² and |β1 + β2|² with (β,β) = 2, (β1,β2) = −c.
    let c = GoldenRational::tau();
    let two = GoldenRational::from_integer(2);
    let diff = &two + &two + &c + &c;
    let sum = &two + &two - &c - &c;
    let plus = &two * &(&two + &c);
    let minus = &two * &(&two - &c);
    let x_plus = diff.checked_div(&plus).expect("nonzero");
    let x_minus = diff.checked_div(&minus).expect("nonzero");
    let y_minus = sum.checked_div(&minus).expect("nonzero");
    o.claim(x_plus.is_one(), format!("|β1−β2|²/(2(2+c)) = {x_plus}: x̂ normalizer 1/√(2(2+c)) gives a unit vector"));
    o.claim(
        !x_minus.is_one(),
        format!("|β1−β2|²/(2(2−c)) = {x_minus} ≈ {:.6}: the alternative 1/√(2(2−c)) on λ_x does not", x_minus.to_f64()),
    );
    o.claim(y_minus.is_one(), format!("|β1+β2|²/(2(2−c)) = {y_minus}: ŷ normalizer 1/√(2(2−c))"));
}

// ---------------------------------------------------------------------------
// group

fn group_orders(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let names = ["W(A_3)", "Aut(A_3)", "W(A_4)", "Aut(A_4)", "W(H_2)"];
    let expected = [24, 48, 120, 240, 10];
    for ((kind, name), e) in GroupKind::ALL.iter().zip(names).zip(expected) {
        let n = generate_group(*kind).len();
        o.claim(n == e, format!("order({name}) = {n}"));
    }
}

fn group_coxeter_relations(_: &mut ChaCha8Rng, o: &mut Outcome) {
    for kind in [GroupKind::WA3, GroupKind::WA4] {
        let d = kind.diagram();
        let gens = generators(kind);
        let mut ok = true;
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
                ok &= acc.is_identity() && acc.matrix().is_identity();
            }
        }
        o.claim(ok, format!("r_i² = (r_i r_i+1)³ = (r_i r_j)² = 1 in {kind}, weight and quaternion forms"));
    }
}

fn group_elements(_: &mut ChaCha8Rng, o: &mut Outcome) {
    for kind in GroupKind::ALL {
        let d = kind.diagram();
        let group = generate_group(kind);
        let mut ok = true;
        for e in &group {
            ok &= e.is_orthogonal() && e.preserves_weight_form(d);
            if let Some(pair) = e.pair() {
                ok &= pair.matrix() == *e.matrix();
            }
        }
        o.claim(ok, format!("{kind}: matrices orthogonal, weight form preserved, pairs agree with matrices"));
    }
}

fn group_representations(_: &mut ChaCha8Rng, o: &mut Outcome) {
    for kind in GroupKind::ALL {
        let d = kind.diagram();
        let mut ok = true;
        for g in generators(kind) {
            for i in 0..d.rank() {
                let wi = LatticeVector::unit(d, Basis::Weight, i).expect("rank");
                let lhs = embed_quaternion(&g.apply_vector(&wi)).expect("A3/A4");
                ok &= lhs == g.apply_quaternion(&embed_quaternion(&wi).expect("A3/A4"));
            }
        }
        o.claim(ok, format!("{kind} generators: embed(weight action λ) = matrix · embed(λ)"));
    }
}

const ORBIT_TABLE: [(&[i64], usize); 11] = [
    (&[1, 0, 0, 0], 5),
    (&[0, 1, 0, 0], 10),
    (&[0, 0, 1, 0], 10),
    (&[0, 0, 0, 1], 5),
    (&[1, 0, 0, 1], 20),
    (&[0, 1, 1, 0], 30),
    (&[1, 1, 1, 1], 120),
    (&[1, 0, 0], 4),
    (&[0, 1, 0], 6),
    (&[1, 0, 1], 12),
    (&[1, 1, 1], 24),
];

fn diagram_of(a: &[i64]) -> Diagram {
    if a.len() == 3 {
        Diagram::A3
    } else {
        Diagram::A4
    }
}

fn group_orbit_table(_: &mut ChaCha8Rng, o: &mut Outcome) {
    for (hw, expected) in ORBIT_TABLE {
        let d = diagram_of(hw);
        let n = orbit(&weight(d, hw)).map(|v| v.len()).unwrap_or(0);
        o.claim(n == expected, format!("|{d} orbit {}| = {n}", weight(d, hw)));
    }
}

fn group_orbit_representations(_: &mut ChaCha8Rng, o: &mut Outcome) {
    for (hw, expected) in ORBIT_TABLE {
        let d = diagram_of(hw);
        let kind = if d == Diagram::A3 { GroupKind::WA3 } else { GroupKind::WA4 };
        let start = embed_quaternion(&weight(d, hw)).expect("A3/A4");
        let mut images: Vec<GoldenQuaternion> =
            generate_group(kind).iter().map(|g| g.apply_quaternion(&start)).collect();
        images.sort();
        images.dedup();
        o.claim(
            images.len() == expected,
            format!("quaternion orbit of {d} {} has {} points", weight(d, hw), images.len()),
        );
    }
}

fn group_orbit_norms(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = 20;
    let ok = count_ok(n, || {
        let hw: Vec<i64> = (0..4).map(|_| rng.gen_range(0..=4)).collect();
        let v = a4(&hw);
        let norm = v.norm_squared();
        orbit(&v).expect("dominant").iter().all(|w| w.norm_squared() == norm)
    });
    o.claim(ok == n, format!("orbit points share the highest weight's norm for {ok}/{n} weights"));
}

fn group_orbit_examples(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let zero = orbit(&a4(&[0, 0, 0, 0])).expect("dominant");
    o.claim(zero.len() == 1 && zero[0].is_zero(), "orbit of 0 is {0}");
    o.claim(orbit(&a4(&[1, -1, 0, 0])) == Err(Error::NegativeCoordinate { index: 1 }), "negative label is rejected");
    let roots = orbit(&weight(Diagram::A3, &[1, 0, 1])).expect("dominant");
    let mut quats: Vec<GoldenQuaternion> = roots.iter().map(|r| embed_quaternion(r).expect("A3")).collect();
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
    o.claim(quats == expected, "A3 (1,0,1) embeds as {±e_i ± e_j}");
}

fn group_a3_presentation(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let g = generate_group(GroupKind::WA3);
    let ok = g.iter().filter(|e| satisfies_a3_presentation(e)).count();
    o.claim(ok == 24, format!("{ok}/24 elements of W(A3) are [p, p̄] (p ∈ T) or [t, t̄]* (√2 t ∈ √2 T′)"));
}

fn group_pyritohedral(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = generate_group(GroupKind::AutA3).iter().filter(|e| is_pyritohedral(e)).count();
    o.claim(n == 24, format!("{n} elements of Aut(A3) have the form [p, p̄] or [p, p̄]* with p ∈ T"));
}

fn group_a4_presentation(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let g = generate_group(GroupKind::WA4);
    let ok = g.iter().filter(|e| satisfies_a4_presentation(e)).count();
    o.claim(ok == 120, format!("{ok}/120 elements satisfy q = ∓½ d gconj(p̄) d with d = e2 − e3"));
}

fn group_icosians(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let ps = signed_first_components(&generate_group(GroupKind::WA4));
    let units = ps.iter().all(|p| p.norm_squared().is_one());
    o.claim(ps.len() == 120 && units, format!("{} distinct unit first components", ps.len()));
    o.claim(is_multiplication_closed(&ps), "first components are closed under multiplication");
}

fn group_symbolic(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let orbit = symbolic_orbit();
    let mut d = orbit.clone();
    d.dedup();
    o.claim(orbit.len() == 120 && d.len() == 120, format!("{} distinct symbolic forms", d.len()));
    for row in [["a1", "a2", "a3", "a4"], ["a2+a3+a4", "-a4", "-a1-a2-a3", "a1+a2"], ["-a4", "-a3", "-a2", "-a1"]] {
        let v = SymbolicVector::parse(&row).expect("valid form");
        o.claim(orbit.binary_search(&v).is_ok(), format!("contains ({})", row.join(", ")));
    }
}

fn group_voronoi(_: &mut ChaCha8Rng, o: &mut Outcome) {
    for (kind, e) in [
        (LatticeKind::A3Root, 14),
        (LatticeKind::A3Weight, 24),
        (LatticeKind::A4Root, 30),
        (LatticeKind::A4Weight, 120),
    ] {
        let n = voronoi_vertices(kind).len();
        o.claim(n == e, format!("{kind:?} Voronoi cell has {n} vertices"));
    }
}

fn group_duals(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let w = dual_vertices(DualPolytope::A4WeightVoronoi);
    o.claim(w.len() == 30, format!("dual of the A4 weight Voronoi cell has {} vertices", w.len()));
    let t = dual_vertices(DualPolytope::A3TruncatedOctahedron);
    let three_quarters = t.iter().filter(|v| v.to_weight().coords().iter().any(|c| c.abs() == q(3, 4))).count();
    o.claim(
        t.len() == 14 && three_quarters == 6,
        format!("A3 dual: {} vertices, {three_quarters} from (3/4)(0,1,0)", t.len()),
    );
    let f = dual_vertices(DualPolytope::A4_0110);
    o.claim(f.len() == 10, format!("dual of (0,1,1,0) has {} vertices", f.len()));
}

fn group_affine(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let z = LatticeVector::zero(Diagram::A4, Basis::Weight).expect("A4");
    let t = affine_translate(&z).expect("A4");
    o.claim(t == a4(&[1, 0, 0, 1]), format!("T(0) = {t} in A4 weight coordinates"));
    let v = a4(&[3, -1, 2, 0]);
    let back = affine_translate_inverse(&affine_translate(&v).expect("A4")).expect("A4");
    o.claim(back == v, "T⁻¹T = 1");
    let z3 = LatticeVector::zero(Diagram::A3, Basis::Root).expect("A3");
    let t3 = affine_translate(&z3).expect("A3");
    o.claim(
        t3 == LatticeVector::from_ints(Diagram::A3, Basis::Root, &[1, 1, 1]).expect("A3"),
        format!("A3 T(0) = root {t3}"),
    );
}

fn group_gamma(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let gamma = a4_diagram_automorphism();
    let roots = simple_roots_quaternion(Diagram::A4).expect("A4");
    let swaps = (0..4).all(|i| gamma.apply_quaternion(&roots[i]) == roots[3 - i]);
    o.claim(swaps, "γ maps α_i to α_5−i on quaternions");
    let v = gamma.apply_vector(&a4(&[1, 2, 3, 4]));
    o.claim(v == a4(&[4, 3, 2, 1]), format!("γ (1,2,3,4) = {v}"));
}

// ---------------------------------------------------------------------------
// projection

fn projection_examples(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let r = 0.4f64.sqrt();
    let p = project_parallel(&a4(&[0, -1, 1, 0])).expect("A4");
    o.claim((p.fx - r).abs() < 1e-12 && p.y.is_zero(), format!("(0,−1,1,0) ↦ ({}, {})", p.fx, p.fy));
    let z = project_parallel(&a4(&[0, 0, 0, 0])).expect("A4");
    o.claim(z.is_origin(), "0 ↦ (0, 0)");
    let p1 = project_parallel(&a4(&[1, 0, 0, 0])).expect("A4");
    let t = coxplane_core::golden::TAU_F64;
    let ok = (p1.fx - 0.5 * r * (t - 1.0)).abs() < 1e-12 && (p1.fy - 0.5 * r * (2.0 + t).sqrt()).abs() < 1e-12;
    o.claim(ok, format!("(1,0,0,0) ↦ ({}, {}) = ½√(2/5)(−σ, √(2+τ))", p1.fx, p1.fy));
    let perp1 = perp_squared_norm(&a4(&[1, 0, 0, 0])).expect("A4");
    o.claim(perp1 == gf(2, 5, 0, 1), format!("perp²(ω1) = {perp1}"));
    let perp2 = perp_squared_norm(&a4(&[0, 1, 0, 0])).expect("A4");
    o.claim(perp2 == gf(4, 5, -2, 5), format!("perp²(ω2) = {perp2}"));
}

fn projection_shadows(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = 1_000;
    let ok = count_ok(n, || {
        let v = a4(&random_ints(rng, 4, 40));
        [Plane::Parallel, Plane::Perpendicular].iter().all(|&plane| {
            let p = project(&v, plane).expect("A4");
            let exact = p.norm_squared().to_f64();
            let float = p.fx * p.fx + p.fy * p.fy;
            exact == 0.0 && float == 0.0 || ((exact - float) / exact).abs() < 1e-12
        })
    });
    o.claim(ok == n, format!("float shadows match exact squared norms to 1e-12 on {ok}/{n} vectors"));
}

fn projection_pythagoras(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = 10_000;
    let ok = count_ok(n, || pythagoras_defect(&a4(&random_ints(rng, 4, 100))).expect("A4").is_zero());
    o.claim(ok == n, format!("par² + perp² = aᵀC⁻¹a on {ok}/{n} vectors"));
}

fn projection_duality(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = 1_000;
    let ok = count_ok(n, || {
        let v = a4(&random_ints(rng, 4, 100));
        perp_squared_norm(&v).expect("A4") == par_squared_norm(&v).expect("A4").conjugate()
    });
    o.claim(ok == n, format!("perp² = conj(par²) on {ok}/{n} vectors"));
}

fn projection_equivariance(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let group = generate_group(GroupKind::WH2);
    let n = 200;
    let ok = count_ok(n, || {
        let v = a4(&random_ints(rng, 4, 30));
        group.iter().all(|e| {
            [Plane::Parallel, Plane::Perpendicular].iter().all(|&plane| {
                let a = planar_action(e, plane);
                let p = project(&v, plane).expect("A4");
                let img = project(&e.apply_vector(&v), plane).expect("A4");
                let ex = a[0][0] * p.fx + a[0][1] * p.fy;
                let ey = a[1][0] * p.fx + a[1][1] * p.fy;
                let scale = 1.0 + p.fx.abs() + p.fy.abs();
                (ex - img.fx).abs() < 1e-12 * scale
                    && (ey - img.fy).abs() < 1e-12 * scale
                    && img.norm_squared() == p.norm_squared()
            })
        })
    });
    o.claim(ok == n, format!("proj(w·v) = A(w)·proj(v) for all 10 elements of W(H2) on {ok}/{n} vectors"));
}

fn projection_routes(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    let n = 1_000;
    let ok = count_ok(n, || {
        let v = LatticeVector::from_ints(Diagram::A4, Basis::Root, &random_ints(rng, 4, 50)).expect("A4");
        [Plane::Parallel, Plane::Perpendicular].iter().all(|&plane| {
            project_root_coords(v.coords(), plane).expect("rank 4").coincides(&project(&v, plane).expect("A4"))
        })
    });
    o.claim(ok == n, format!("root-coordinate functionals agree with a = Cm on {ok}/{n} vectors"));
}

fn projection_root_normalizers(_: &mut ChaCha8Rng, o: &mut Outcome) {
    // Reference numerators and squared normalizers, in root coordinates.
    let t = GoldenRational::tau;
    let s = GoldenRational::sigma;
    let one = GoldenRational::one;
    let two = GoldenRational::from_integer(2);
    let reference: [(&str, [GoldenRational; 4], GoldenRational); 4] = [
        ("Λ_x", [-one(), t(), -t(), one()], two.clone()),
        ("Λ_y", [-s(), one(), one(), -s()], &two * &(t() + two.clone())),
        ("Λ_z", [-one(), s(), -s(), one()], two.clone()),
        ("Λ_w", [-t(), one(), one(), -t()], &two * &(s() + two.clone())),
    ];
    let [par, perp] = [Plane::Parallel, Plane::Perpendicular].map(root_coordinate_functionals);
    let (nx, ny) = coxplane_core::pointset::Normalizer::for_plane(Plane::Parallel);
    let (nz, nw) = coxplane_core::pointset::Normalizer::for_plane(Plane::Perpendicular);
    let exact = [(&par[0], nx), (&par[1], ny), (&perp[0], nz), (&perp[1], nw)];
    for ((name, coeffs, n2), (f, norm)) in reference.iter().zip(exact) {
        // f = k·coeffs; the exact coordinate is f·m / N, so the reference
        // normalizer must satisfy N_ref² = N² / k².
        let k = f[0].checked_div(&coeffs[0]).expect("nonzero leading coefficient");
        let proportional = f.iter().zip(coeffs).all(|(a, b)| *a == b * &k);
        let implied = norm.norm_squared.checked_div(&k.square()).expect("nonzero");
        let sign = if (k.sign() == Sign::Negative) ^ norm.sign.is_negative() { "−" } else { "+" };
        let matches = proportional && implied == *n2;
        let verdict = if matches { "matches" } else { "differs from" };
        o.claim(proportional, format!("{name}: implied normalizer² {implied} (sign {sign}) {verdict} reference {n2}"));
    }
}

fn projection_debruijn(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let vs = debruijn_vertices();
    let cos = twice_cos_fifths();
    let r = 0.4f64.sqrt();
    let mut float_ok = true;
    let mut exact_ok = true;
    for (k, (_, p)) in vs.iter().enumerate() {
        let th = 2.0 * std::f64::consts::PI * k as f64 / 5.0;
        float_ok &= (p.fx - r * th.cos()).abs() < 1e-12 && (p.fy - r * th.sin()).abs() < 1e-12;
        exact_ok &= p.norm_squared() == gf(2, 5, 0, 1) && p.x == &cos[k] * &GoldenRational::tau();
    }
    o.claim(vs.len() == 5 && float_ok, "5-cell vertices at √(2/5)ζ^k within 1e-12");
    o.claim(exact_ok, "par² = 2/5 and X_k = τ·2cos(2πk/5) exactly");
    let order = [[0, -1, 1, 0], [1, 0, 0, 0], [-1, 1, 0, 0], [0, 0, -1, 1], [0, 0, 0, -1]];
    let listed = vs.iter().zip(order).all(|((v, _), a)| *v == a4(&a));
    o.claim(listed, "ζ⁰..ζ⁴ come from (0,−1,1,0), (1,0,0,0), (−1,1,0,0), (0,0,−1,1), (0,0,0,−1)");
    let neg = vs.iter().all(|(v, p)| {
        let q = project_parallel(&-v).expect("A4");
        q.x == -&p.x && q.y == -&p.y
    });
    o.claim(neg, "orbit (0,0,0,1) projects to the negatives");
}

fn projection_reflections(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let d = dihedral_generators();
    o.claim(d.r1.pow(2).is_identity() && d.r2.pow(2).is_identity(), "R1² = R2² = I");
}

fn projection_coxeter_element(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let d = dihedral_generators();
    let p = d.product();
    o.claim(p.pow(5).is_identity() && !p.is_identity(), "(R1R2)^5 = I");
}

fn projection_beta_matrices(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let d = dihedral_generators();
    let t = GoldenRational::tau;
    let s = GoldenRational::sigma;
    let i = |n: i64| GoldenRational::from_integer(n);
    let r1 = Matrix::from_rows(vec![
        vec![i(-1), i(0), i(0), i(0)],
        vec![t(), i(1), i(0), i(0)],
        vec![i(0), i(0), i(-1), i(0)],
        vec![i(0), i(0), s(), i(1)],
    ])
    .expect("square");
    let r2 = Matrix::from_rows(vec![
        vec![i(1), t(), i(0), i(0)],
        vec![i(0), i(-1), i(0), i(0)],
        vec![i(0), i(0), i(1), s()],
        vec![i(0), i(0), i(0), i(-1)],
    ])
    .expect("square");
    o.claim(d.r1 == r1, format!("R1 on (β1..β4), rows as images: {}", d.r1));
    o.claim(d.r2 == r2, format!("R2 on (β1..β4), rows as images: {}", d.r2));
}

fn projection_rotation(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let d = dihedral_generators();
    let m = &d.r2_orth * &d.r1_orth;
    let (c1, s1) = ((0.4 * std::f64::consts::PI).cos(), (0.4 * std::f64::consts::PI).sin());
    let (c2, s2) = ((0.8 * std::f64::consts::PI).cos(), (0.8 * std::f64::consts::PI).sin());
    let expected = [[c1, s1, 0.0, 0.0], [-s1, c1, 0.0, 0.0], [0.0, 0.0, c2, s2], [0.0, 0.0, -s2, c2]];
    let err = (0..4)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .map(|(i, j)| (m.get(i, j) - expected[i][j]).abs())
        .fold(0.0, f64::max);
    o.claim(err < 1e-12, format!("R2'R1' = rotation by 72° on E∥ and 144° on E⊥, max deviation {err:.1e}"));
    let inv = d.product_orth();
    let err_inv = (0..4)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .map(|(i, j)| (inv.get(j, i) - expected[i][j]).abs())
        .fold(0.0, f64::max);
    o.claim(err_inv < 1e-12, format!("R1'R2' is the inverse rotation, max deviation {err_inv:.1e}"));
}

fn projection_hypercube(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let h = hypercube_decompose();
    let counts: Vec<usize> = [[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
        .iter()
        .map(|k| h.get(k).copied().unwrap_or(0))
        .collect();
    let total: usize = h.values().sum();
    o.claim(
        counts == [2, 5, 10, 10, 5] && h.len() == 5 && total == 32,
        format!("Q5 vertices by W(A4) orbit {counts:?}, total {total}"),
    );
}

fn projection_voronoi_rings(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let pts = voronoi_vertices(LatticeKind::A4Root).iter().map(|v| project_parallel(v).expect("A4")).collect();
    let hist = PointSet2D::new(pts, vec![]).radius_histogram();
    let base = golden_radius(0);
    let expected = vec![
        (&base * &GoldenRational::sigma().square(), 10),
        (base.clone(), 10),
        (&base * &GoldenRational::tau().square(), 10),
    ];
    let text: Vec<String> = hist.iter().map(|(r, n)| format!("{r} ×{n}")).collect();
    o.claim(hist == expected, format!("Voronoi(A4 root) in E∥: {}", text.join(", ")));
}

// ---------------------------------------------------------------------------
// quasilattice

fn root_config(par_power: u32) -> StripConfig {
    StripConfig::new(StripLattice::Root, window_from_voronoi(StripLattice::Root), golden_radius(par_power))
        .expect("positive radii")
}

fn quasi_windows_positive(_: &mut ChaCha8Rng, o: &mut Outcome) {
    o.claim(Window::custom(GoldenRational::zero()) == Err(Error::EmptyWindow), "window radius 0 is rejected");
    o.claim(Window::custom(g(1, -1)) == Err(Error::EmptyWindow), "window radius 1 − τ < 0 is rejected");
    let w = window_from_voronoi(StripLattice::Root);
    o.claim(
        StripConfig::new(StripLattice::Root, w, GoldenRational::zero()) == Err(Error::EmptyPatch),
        "patch radius 0 is rejected",
    );
}

fn quasi_voronoi_windows(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let r = window_from_voronoi(StripLattice::Root);
    o.claim(*r.squared_radius() == golden_radius(2), format!("root window r² = {} = (2/5)τ²", r.squared_radius()));
    let w = window_from_voronoi(StripLattice::Weight);
    o.claim(
        *w.squared_radius() == gf(14, 125, 22, 125),
        format!("weight window r² = {} ≈ {:.12}", w.squared_radius(), w.squared_radius().to_f64()),
    );
}

fn quasi_origin(_: &mut ChaCha8Rng, o: &mut Outcome) {
    for lattice in [StripLattice::Root, StripLattice::Weight] {
        let cfg = StripConfig::new(lattice, window_from_voronoi(lattice), golden_radius(0)).expect("positive");
        let ok = strip_accept(&cfg).map(|a| a.contains(&[0, 0, 0, 0])).unwrap_or(false);
        o.claim(ok, format!("{} lattice strip contains the origin", lattice.name()));
    }
}

fn quasi_completeness(rng: &mut ChaCha8Rng, o: &mut Outcome) {
    for lattice in [StripLattice::Root, StripLattice::Weight] {
        let cfg = StripConfig::new(lattice, window_from_voronoi(lattice), golden_radius(3)).expect("positive");
        let same = strip_accept(&cfg).ok() == brute_force_accept(&cfg, 5).ok();
        o.claim(
            same,
            format!("{} lattice, par² ≤ (2/5)τ³: box scan equals a brute-force scan of [−5,5]⁴", lattice.name()),
        );
    }
    let off: Vec<Rational> = (0..4).map(|_| q(rng.gen_range(-6..=6), rng.gen_range(2..=9))).collect();
    let offset = LatticeVector::new(Diagram::A4, Basis::Weight, off).expect("rank 4");
    let cfg = root_config(2).with_offset(offset.clone()).expect("A4 offset");
    let same = strip_accept(&cfg).ok() == brute_force_accept(&cfg, 5).ok();
    o.claim(same, format!("offset {offset}: box scan equals brute force"));
}

fn quasi_d5(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let gens = generators(GroupKind::WH2);
    let r1r2 = gens[0].then(&gens[1]);
    for power in [4, 6] {
        let cfg = root_config(power);
        let accepted = strip_accept(&cfg).expect("within cap");
        let projected = strip_project(&cfg).expect("within cap");
        for (name, g) in [("R1", &gens[0]), ("R1R2", &r1r2)] {
            let mut image: Vec<[i64; 4]> = accepted
                .iter()
                .map(|c| {
                    let v = LatticeVector::from_ints(Diagram::A4, Basis::Root, c).expect("A4");
                    let w = g.apply_vector(&v).int_coords().expect("integral");
                    [w[0], w[1], w[2], w[3]]
                })
                .collect();
            image.sort();
            let pts = image
                .iter()
                .map(|c| {
                    project_parallel(&LatticeVector::from_ints(Diagram::A4, Basis::Root, c).expect("A4")).expect("A4")
                })
                .collect();
            let same_points = PointSet2D::new(pts, vec![]).same_points(&projected);
            o.claim(
                image == accepted && same_points,
                format!("par² ≤ (2/5)τ^{power}: {} points, set fixed by {name}", accepted.len()),
            );
        }
    }
}

fn quasi_monotone(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let window = window_from_voronoi(StripLattice::Root);
    let small = strip_accept(&root_config(3)).expect("within cap");
    let big = strip_accept(&root_config(5)).expect("within cap");
    let wide_cfg =
        StripConfig::new(StripLattice::Root, Window::custom(golden_radius(4)).expect("positive"), golden_radius(3))
            .expect("positive");
    let wide = strip_accept(&wide_cfg).expect("within cap");
    let sub = |a: &[[i64; 4]], b: &[[i64; 4]]| a.iter().all(|p| b.binary_search(p).is_ok());
    o.claim(sub(&small, &big), format!("growing par² keeps all {} points ({} after)", small.len(), big.len()));
    o.claim(
        sub(&small, &wide),
        format!("growing the window from {} keeps all points ({} after)", window.squared_radius(), wide.len()),
    );
}

fn quasi_duplicates(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let set = strip_project(&root_config(8)).expect("within cap");
    o.claim(set.collisions == 0, format!("{} projected points, {} coincidences", set.len(), set.collisions));
}

fn quasi_rings(_: &mut ChaCha8Rng, o: &mut Outcome) {
    for lattice in [StripLattice::Root, StripLattice::Weight] {
        let cfg =
            StripConfig::new(lattice, window_from_voronoi(StripLattice::Root), golden_radius(8)).expect("positive");
        let set = strip_project(&cfg).expect("within cap");
        let base = ring_base(lattice);
        for (r, n) in ring_counts(&set, &base, 3) {
            o.claim(n > 0 && n % 10 == 0, format!("{} lattice: {n} points on the circle r² = {r}", lattice.name()));
        }
    }
}

fn quasi_five_cells(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let cfg = StripConfig::new(StripLattice::Weight, window_from_voronoi(StripLattice::Root), golden_radius(0))
        .expect("positive");
    let set = strip_project(&cfg).expect("within cap");
    let mut found = 0;
    for hw in [[1, 0, 0, 0], [0, 0, 0, 1]] {
        for v in orbit(&a4(&hw)).expect("dominant") {
            found += set.contains(&project_parallel(&v).expect("A4")) as usize;
        }
    }
    o.claim(
        found == 10,
        format!("{found}/10 projected 5-cell vertices lie in the (2/5)τ² strip of the weight lattice"),
    );
}

fn quasi_slab(_: &mut ChaCha8Rng, o: &mut Outcome) {
    for (a, s, e) in [(0, 0, 1), (2, 2, 381), (3, 3, 1451)] {
        let set = slab_project(a, s);
        o.claim(
            set.len() == e && set.collisions == 0,
            format!("slab({a}, {s}) has {} points, {} coincidences", set.len(), set.collisions),
        );
    }
}

fn quasi_cap(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let cfg = root_config(6).with_max_box(100);
    let err = StripPlan::new(&cfg).err();
    o.claim(
        matches!(err, Some(Error::ResourceLimit { cap: 100, .. })),
        format!("box above the cap: {}", err.map(|e| e.to_string()).unwrap_or_default()),
    );
}

fn quasi_sorted(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let set = strip_project(&root_config(6)).expect("within cap");
    let exact = set.points.windows(2).all(|w| w[0].cmp_yx(&w[1]).is_le());
    let floats =
        set.points.windows(2).all(|w| (w[0].fy, w[0].fx) <= (w[1].fy, w[1].fx) || (w[0].fy - w[1].fy).abs() < 1e-12);
    o.claim(exact && floats, format!("{} points sorted by (y, x)", set.len()));
}

fn quasi_json(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let mut set = strip_project(&root_config(4)).expect("within cap");
    set.points.push(coxplane_core::PlanarPoint::new(Plane::Perpendicular, gf(1, 3, -2, 7), GoldenRational::tau()));
    let back = from_json(&to_json(&set)).ok();
    o.claim(back.as_ref() == Some(&set), format!("parse(emit(P)) = P for {} points", set.len()));
}

fn quasi_bytes(_: &mut ChaCha8Rng, o: &mut Outcome) {
    let style = SvgStyle::default();
    for format in [Format::Csv, Format::Json, Format::Svg] {
        let a = render(&strip_project(&root_config(4)).expect("within cap"), format, &style);
        let b = render(&strip_project(&root_config(4)).expect("within cap"), format, &style);
        o.claim(a == b, format!("{} output identical across runs ({} bytes)", format.extension(), a.len()));
    }
}

// ---------------------------------------------------------------------------

macro_rules! checks {
    ($($suite:ident $id:literal => $f:ident),* $(,)?) => {
        &[$(Check { id: $id, suite: Suite::$suite, run: $f }),*]
    };
}

static REGISTRY: &[Check] = checks![
    Golden "golden.canonical" => golden_canonical,
    Golden "golden.examples" => golden_examples,
    Golden "golden.field_axioms" => golden_field_axioms,
    Golden "golden.conjugation" => golden_conjugation,
    Golden "golden.sign" => golden_sign,
    Golden "golden.norm" => golden_norm,
    Quaternion "quaternion.examples" => quaternion_examples,
    Quaternion "quaternion.norm" => quaternion_norm,
    Quaternion "quaternion.reflection" => quaternion_reflection,
    Quaternion "quaternion.composition" => quaternion_composition,
    Quaternion "quaternion.conjugation" => quaternion_conjugation,
    Quaternion "quaternion.canonical_pairs" => quaternion_canonical,
    Coxeter "coxeter.cartan" => coxeter_cartan,
    Coxeter "coxeter.coxeter_number" => coxeter_numbers,
    Coxeter "coxeter.conversion" => coxeter_conversion,
    Coxeter "coxeter.round_trip" => coxeter_round_trip,
    Coxeter "coxeter.embedding" => coxeter_embedding,
    Coxeter "coxeter.frame" => coxeter_frame,
    Coxeter "coxeter.eigenvector" => coxeter_eigenvector,
    Coxeter "coxeter.normalization" => coxeter_normalization,
    Coxeter "coxeter.betas" => coxeter_betas,
    Coxeter "coxeter.block_diagonal" => coxeter_block,
    Coxeter "coxeter.axis_normalizers" => coxeter_axis_normalizers,
    Group "group.orders" => group_orders,
    Group "group.coxeter_relations" => group_coxeter_relations,
    Group "group.elements" => group_elements,
    Group "group.representations" => group_representations,
    Group "group.orbit_sizes" => group_orbit_table,
    Group "group.orbit_representations" => group_orbit_representations,
    Group "group.orbit_norms" => group_orbit_norms,
    Group "group.orbit_examples" => group_orbit_examples,
    Group "group.a3_presentation" => group_a3_presentation,
    Group "group.pyritohedral" => group_pyritohedral,
    Group "group.a4_presentation" => group_a4_presentation,
    Group "group.icosians" => group_icosians,
    Group "group.symbolic_orbit" => group_symbolic,
    Group "group.voronoi" => group_voronoi,
    Group "group.duals" => group_duals,
    Group "group.affine" => group_affine,
    Group "group.diagram_automorphism" => group_gamma,
    Projection "projection.examples" => projection_examples,
    Projection "projection.float_shadows" => projection_shadows,
    Projection "projection.pythagoras" => projection_pythagoras,
    Projection "projection.conjugation_duality" => projection_duality,
    Projection "projection.equivariance" => projection_equivariance,
    Projection "projection.root_weight_routes" => projection_routes,
    Projection "projection.root_coordinate_normalizers" => projection_root_normalizers,
    Projection "projection.debruijn" => projection_debruijn,
    Projection "projection.reflections" => projection_reflections,
    Projection "projection.coxeter_element" => projection_coxeter_element,
    Projection "projection.beta_matrices" => projection_beta_matrices,
    Projection "projection.rotation" => projection_rotation,
    Projection "projection.hypercube" => projection_hypercube,
    Projection "projection.voronoi_rings" => projection_voronoi_rings,
    Quasilattice "quasilattice.positive_radii" => quasi_windows_positive,
    Quasilattice "quasilattice.voronoi_windows" => quasi_voronoi_windows,
    Quasilattice "quasilattice.origin" => quasi_origin,
    Quasilattice "quasilattice.completeness" => quasi_completeness,
    Quasilattice "quasilattice.d5_invariance" => quasi_d5,
    Quasilattice "quasilattice.monotonicity" => quasi_monotone,
    Quasilattice "quasilattice.no_duplicates" => quasi_duplicates,
    Quasilattice "quasilattice.inflation_rings" => quasi_rings,
    Quasilattice "quasilattice.five_cells" => quasi_five_cells,
    Quasilattice "quasilattice.slab" => quasi_slab,
    Quasilattice "quasilattice.resource_limit" => quasi_cap,
    Quasilattice "quasilattice.sorted" => quasi_sorted,
    Quasilattice "quasilattice.json_round_trip" => quasi_json,
    Quasilattice "quasilattice.byte_determinism" => quasi_bytes,
];

pub fn registry() -> &'static [Check] {
    REGISTRY
}

/// One report line per check, for listing.
pub fn describe() -> String {
    let mut s = String::new();
    for c in registry() {
        let _ = writeln!(s, "{}\t{}", c.suite.name(), c.id);
    }
    s
}
