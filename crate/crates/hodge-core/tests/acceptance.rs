//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Every tolerance is pinned here; all algebraic verdicts are exact.

mod common;

use std::time::Instant;

use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hodge_core::degeneration::{contractibility_check, primitive_limit, IntersectionMatrix};
use hodge_core::exterior::{
    hodge_star, inner_product, volume_element, wedge, ExteriorElement, MetricSpec,
    OrientationSpec,
};
use hodge_core::fourier;
use hodge_core::kahler::kahler_identity_suite;
use hodge_core::lefschetz::{
    hard_lefschetz_check, hodge_riemann_check, lefschetz_polarization_form, polarization_check,
    primitive_decompose, primitive_slice, primitive_subspace, HodgeStructureSlice,
    RingBilinearForm,
};
use hodge_core::multi_index::MultiIndex;
use hodge_core::ring::{hodge_diamond, ring_builtin, BuiltinRing, GradedRing};
use hodge_core::scalar::{rat, rat_int, GaussRational, Rational};

/// Collects sub-check failures for one criterion and prints the verdict line.
struct Criterion {
    number: usize,
    title: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(number: usize, title: &'static str) -> Self {
        Criterion { number, title, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, detail: impl Fn() -> String) {
        if !ok {
            self.failures.push(detail());
        }
    }

    fn finish(self) {
        let verdict = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("[acceptance] criterion {:2} ({}): {}", self.number, self.title, verdict);
        assert!(
            self.failures.is_empty(),
            "criterion {} failed:\n  {}",
            self.number,
            self.failures.join("\n  ")
        );
    }
}

fn random_metric(rng: &mut StdRng, m: usize) -> (Vec<Vec<Rational>>, MetricSpec) {
    let a = random_transition(rng, m);
    let gram = matmul(&transpose(&a), &a);
    let g = MetricSpec::new(gram).expect("AᵀA is SPD");
    (a, g)
}

/// Star of every degree-`p` basis element, as a table of elements.
fn star_table(g: &MetricSpec, p: usize) -> Vec<ExteriorElement> {
    let m = g.dim();
    MultiIndex::all(m, p)
        .into_iter()
        .map(|idx| {
            hodge_star(
                &ExteriorElement::basis(m, idx).unwrap(),
                g,
                OrientationSpec::STANDARD,
            )
            .unwrap()
        })
        .collect()
}

#[test]
fn acceptance_01_star_involution() {
    let mut c = Criterion::new(1, "star involution, 50 random metrics per dimension");
    let mut rng = StdRng::seed_from_u64(101);
    let start = Instant::now();
    for m in 1..=6usize {
        for trial in 0..50 {
            let (_, g) = random_metric(&mut rng, m);
            for p in 0..=m {
                let table_p = star_table(&g, p);
                let table_q = star_table(&g, m - p);
                let basis_q = MultiIndex::all(m, m - p);
                let basis_p = MultiIndex::all(m, p);
                let sign_flip = (p * (m - p)) % 2 == 1;
                for (j, starred) in table_p.iter().enumerate() {
                    // compose coefficient-wise: ⋆⋆e_J = Σ_K (⋆e_J)_K ⋆e_K
                    let mut ss = ExteriorElement::zero(m);
                    for (pos, k_idx) in basis_q.iter().enumerate() {
                        let coeff = starred.coeff(k_idx);
                        if !coeff.is_zero() {
                            ss = ss.add(&table_q[pos].scale(&coeff)).unwrap();
                        }
                    }
                    let e_j = ExteriorElement::basis(m, basis_p[j].clone()).unwrap();
                    let expect = if sign_flip { e_j.neg() } else { e_j };
                    c.check(ss == expect, || {
                        format!("m={m} trial={trial} p={p} J={} double star mismatch", basis_p[j])
                    });
                }
            }
        }
    }
    let elapsed = start.elapsed();
    println!("[acceptance] criterion  1 runtime: {elapsed:?}");
    c.check(elapsed.as_secs_f64() < 10.0, || format!("runtime {elapsed:?} exceeds 10 s"));
    c.finish();
}

#[test]
fn acceptance_02_star_defining_identity() {
    let mut c = Criterion::new(2, "star defining identity and unit/volume images");
    let mut rng = StdRng::seed_from_u64(202);
    for m in 1..=5usize {
        for _ in 0..6 {
            let (_, g) = random_metric(&mut rng, m);
            let o = OrientationSpec::STANDARD;
            let dv = volume_element(&g, o).unwrap();
            // ⋆(1) = dV and ⋆(dV) = 1
            let one = ExteriorElement::one(m);
            c.check(hodge_star(&one, &g, o).unwrap() == dv, || format!("m={m}: star(1) != dV"));
            c.check(
                hodge_star(&dv, &g, o).unwrap() == one,
                || format!("m={m}: star(dV) != 1"),
            );
            // u ∧ ⋆v = ⟨u,v⟩ dV on random homogeneous pairs
            for p in 0..=m {
                for _ in 0..3 {
                    let u = random_element(&mut rng, m, Some(p));
                    let v = random_element(&mut rng, m, Some(p));
                    let lhs = wedge(&u, &hodge_star(&v, &g, o).unwrap()).unwrap();
                    let rhs = dv.scale(&inner_product(&u, &v, &g).unwrap());
                    c.check(lhs == rhs, || format!("m={m} p={p}: defining identity fails"));
                }
            }
        }
    }
    c.finish();
}

#[test]
fn acceptance_03_inner_product_oracle() {
    let mut c = Criterion::new(3, "Gram-determinant inner product vs change-of-basis oracle");
    let mut rng = StdRng::seed_from_u64(303);
    let mut pairs = 0usize;
    while pairs < 100 {
        let m = rng.gen_range(1..=5usize);
        let a = random_transition(&mut rng, m);
        let g = MetricSpec::new(matmul(&transpose(&a), &a)).unwrap();
        let p = rng.gen_range(0..=m);
        let u = random_element(&mut rng, m, Some(p));
        let v = random_element(&mut rng, m, Some(p));
        let direct = inner_product(&u, &v, &g).unwrap();
        let oracle = inner_oracle(&u, &v, &a);
        c.check(direct == oracle, || format!("pair {pairs} (m={m}, p={p}): {direct} != {oracle}"));
        pairs += 1;
    }
    c.finish();
}

#[test]
fn acceptance_04_torus_hodge_theory() {
    let mut c = Criterion::new(4, "flat-torus harmonic counts, decomposition, pairing, Laplacian");
    // binomial oracle by Pascal's triangle
    let mut pascal = vec![vec![1usize]];
    for r in 1..=5 {
        let prev = &pascal[r - 1];
        let mut row = vec![1usize];
        for i in 1..r {
            row.push(prev[i - 1] + prev[i]);
        }
        row.push(1);
        pascal.push(row);
    }
    for m in 1..=5usize {
        c.check(fourier::betti_numbers(m) == pascal[m], || format!("betti numbers at m={m}"));
        for p in 0..=m {
            let det = fourier::poincare_pairing(m, p).unwrap().det().unwrap();
            c.check(!det.is_zero(), || format!("degenerate pairing m={m} p={p}"));
        }
    }

    // Hodge decomposition of random forms with |k|∞ ≤ 3
    let mut rng = StdRng::seed_from_u64(404);
    for m in 2..=4usize {
        let g = MetricSpec::euclidean(m);
        for trial in 0..5 {
            let mut f = fourier::FourierForm::zero(m);
            for _ in 0..4 {
                let k: Vec<i64> = (0..m).map(|_| rng.gen_range(-3..=3)).collect();
                f.add_mode(k, random_element(&mut rng, m, None)).unwrap();
            }
            let (h, de, dse) = fourier::hodge_decompose(&f).unwrap();
            let sum = h.add(&de).unwrap().add(&dse).unwrap();
            c.check(sum == f, || format!("m={m} trial={trial}: reconstruction"));
            let o1 = fourier::fourier_inner(&h, &de, &g).unwrap();
            let o2 = fourier::fourier_inner(&h, &dse, &g).unwrap();
            let o3 = fourier::fourier_inner(&de, &dse, &g).unwrap();
            c.check(o1.is_zero() && o2.is_zero() && o3.is_zero(), || {
                format!("m={m} trial={trial}: orthogonality")
            });
            c.check(
                h.modes().all(|(k, _)| k.iter().all(|&x| x == 0)),
                || format!("m={m} trial={trial}: harmonic part off k=0"),
            );
        }
    }

    // Δ = |k|²·id per mode
    for m in 2..=3usize {
        for k0 in -2i64..=2 {
            for k1 in -2i64..=2 {
                let mut k = vec![0i64; m];
                k[0] = k0;
                k[1] = k1;
                let ksq: i64 = k.iter().map(|x| x * x).sum();
                for p in 0..=m {
                    for idx in MultiIndex::all(m, p) {
                        let mut f = fourier::FourierForm::zero(m);
                        let coeff = ExteriorElement::basis(m, idx).unwrap();
                        f.add_mode(k.clone(), coeff.clone()).unwrap();
                        let lap = fourier::laplacian(&f, fourier::LaplacianFlavor::Full).unwrap();
                        c.check(
                            lap.coefficient(&k) == coeff.scale(&GaussRational::from_int(ksq)),
                            || format!("Laplacian eigenvalue at m={m} k={k:?}"),
                        );
                    }
                }
            }
        }
    }
    c.finish();
}

#[test]
fn acceptance_05_kahler_identity_suite() {
    let mut c = Criterion::new(5, "Kähler identity suite, zero residual at every mode");
    let required = [
        "fikg3a", "fikg3b", "fikg3c", "fikg3d", "fikg1a", "fikg1b", "fikg2a", "fikg2b", "lsc",
        "lap-pi", "111", "ez3", "ez33", "333", "3A", "3B",
    ];
    let start = Instant::now();
    for n in 1..=3usize {
        let report = kahler_identity_suite(n, 2);
        let expected_modes = 5usize.pow(2 * n as u32);
        c.check(report.modes_checked == expected_modes, || {
            format!("n={n}: checked {} of {} modes", report.modes_checked, expected_modes)
        });
        for id in required {
            let rel = report.relations.iter().find(|r| r.id == id);
            match rel {
                None => c.check(false, || format!("n={n}: relation {id} missing")),
                Some(rel) => c.check(rel.pass, || {
                    format!("n={n}: relation {id} has nonzero residual: {:?}", rel.failures.first())
                }),
            }
        }
        c.check(report.pass, || format!("n={n}: suite reports failure"));
    }
    let elapsed = start.elapsed();
    println!("[acceptance] criterion  5 runtime: {elapsed:?}");
    c.check(elapsed.as_secs_f64() < 60.0, || format!("runtime {elapsed:?} exceeds 60 s"));
    c.finish();
}

#[test]
fn acceptance_06_hard_lefschetz() {
    let mut c = Criterion::new(6, "hard Lefschetz passes on fixtures, fails at r=1 on the 3-fold");
    for n in 1..=6usize {
        let ring = ring_builtin(BuiltinRing::ProjectiveSpace(n)).unwrap();
        let report = hard_lefschetz_check(&ring, &ring.ample_class().unwrap()).unwrap();
        c.check(report.pass, || format!("projective space n={n}"));
    }
    for n in 1..=3usize {
        let ring = ring_builtin(BuiltinRing::Torus(n)).unwrap();
        let report = hard_lefschetz_check(&ring, &ring.ample_class().unwrap()).unwrap();
        c.check(report.pass, || format!("torus n={n}"));
    }
    for kind in [BuiltinRing::QuadricSurface, BuiltinRing::ProductP1P1] {
        let ring = ring_builtin(kind).unwrap();
        let report = hard_lefschetz_check(&ring, &ring.ample_class().unwrap()).unwrap();
        c.check(report.pass, || format!("{kind:?}"));
    }
    // the pullback class on the blown-up 3-fold fails exactly at r = 1
    let ring = ring_builtin(BuiltinRing::BlowupP3Point).unwrap();
    let h = ring.element_by_name("h").unwrap();
    let report = hard_lefschetz_check(&ring, &h).unwrap();
    c.check(!report.pass, || "blowup of the 3-fold should fail".to_string());
    c.check(report.first_failure == Some(1), || {
        format!("first failure at {:?}, expected r=1", report.first_failure)
    });
    for level in &report.levels {
        let expect = level.r != 1;
        c.check(level.iso == expect, || {
            format!("blowup level r={} iso={} (expected {})", level.r, level.iso, expect)
        });
    }
    c.finish();
}

fn passing_fixtures() -> Vec<(String, GradedRing)> {
    let mut out: Vec<(String, GradedRing)> = Vec::new();
    for n in 1..=4usize {
        out.push((format!("pn:{n}"), ring_builtin(BuiltinRing::ProjectiveSpace(n)).unwrap()));
    }
    for n in 1..=3usize {
        out.push((format!("torus:{n}"), ring_builtin(BuiltinRing::Torus(n)).unwrap()));
    }
    out.push(("quadric".into(), ring_builtin(BuiltinRing::QuadricSurface).unwrap()));
    out.push(("p1xp1".into(), ring_builtin(BuiltinRing::ProductP1P1).unwrap()));
    out.push(("blowup_p2".into(), ring_builtin(BuiltinRing::BlowupP2).unwrap()));
    out
}

#[test]
fn acceptance_07_primitive_decomposition() {
    let mut c = Criterion::new(7, "primitive decomposition bookkeeping and orthogonality");
    for (name, ring) in passing_fixtures() {
        let omega = ring.ample_class().unwrap();
        let betti = ring.betti_numbers();
        for l in 0..=ring.complex_dim() {
            // dim P^l = b_l − b_{l−2}
            let prim = primitive_subspace(&ring, &omega, l).unwrap();
            let expect = betti[l] - if l >= 2 { betti[l - 2] } else { 0 };
            c.check(prim.len() == expect, || {
                format!("{name}: dim P^{l} = {} expected {expect}", prim.len())
            });
            let dec = primitive_decompose(&ring, &omega, l).unwrap();
            c.check(dec.direct_sum, || format!("{name}: H^{l} direct sum"));
            c.check(dec.orthogonal, || format!("{name}: H^{l} summand orthogonality"));
            c.check(dec.bigraded, || format!("{name}: H^{l} summands bigraded"));
            c.check(dec.dims_sum == betti[l], || {
                format!("{name}: H^{l} dims {} != b_{l} {}", dec.dims_sum, betti[l])
            });
        }
    }
    c.finish();
}

#[test]
fn acceptance_08_hodge_riemann() {
    let mut c = Criterion::new(8, "Hodge-Riemann signatures on torus and quadric");
    let ring = ring_builtin(BuiltinRing::Torus(1)).unwrap();
    let omega = ring.ample_class().unwrap();
    let report = hodge_riemann_check(&ring, &omega, 1).unwrap();
    c.check(report.pass, || "torus(1) weight 1".to_string());
    for (p, q) in [(1usize, 0usize), (0, 1)] {
        let slice = report.slices.iter().find(|s| (s.p, s.q) == (p, q));
        match slice {
            None => c.check(false, || format!("torus(1) missing ({p},{q}) slice")),
            Some(s) => {
                c.check(
                    s.dim == 1 && s.matrix.at(0, 0) == &GaussRational::from_int(2),
                    || format!("torus(1) ({p},{q}) value {:?}, expected [2]", s.matrix.at(0, 0)),
                );
                c.check(s.positive_definite, || format!("torus(1) ({p},{q}) not positive"));
            }
        }
    }

    let ring = ring_builtin(BuiltinRing::QuadricSurface).unwrap();
    let omega = ring.ample_class().unwrap();
    let report = hodge_riemann_check(&ring, &omega, 2).unwrap();
    c.check(report.pass, || "quadric weight 2".to_string());
    let s = report.slices.iter().find(|s| (s.p, s.q) == (1, 1)).expect("(1,1) slice");
    c.check(
        s.matrix.at(0, 0) == &GaussRational::from_int(2) && s.positive_definite,
        || format!("quadric twisted matrix {:?}, expected [2]", s.matrix.at(0, 0)),
    );
    c.check(
        s.raw_matrix.at(0, 0) == &GaussRational::from_int(-2)
            && s.raw_definiteness == "negative-definite",
        || format!("quadric raw cup form {:?}, expected [-2]", s.raw_matrix.at(0, 0)),
    );
    c.finish();
}

#[test]
fn acceptance_09_polarization_suite() {
    let mut c = Criterion::new(9, "polarization parity, positivity, and restriction");
    // torus(1), weight 1 (odd: Ψ antisymmetric)
    let ring = ring_builtin(BuiltinRing::Torus(1)).unwrap();
    let omega = ring.ample_class().unwrap();
    let slice = primitive_slice(&ring, &omega, 1).unwrap();
    let psi = lefschetz_polarization_form(&ring, &omega, 1).unwrap();
    let report = polarization_check(&ring, &slice, &psi).unwrap();
    c.check(report.pass && report.parity_ok, || format!("torus(1) weight 1: {report:?}"));

    // quadric, weight 2 (even: Ψ symmetric)
    let ring = ring_builtin(BuiltinRing::QuadricSurface).unwrap();
    let omega = ring.ample_class().unwrap();
    let slice = primitive_slice(&ring, &omega, 2).unwrap();
    let psi = lefschetz_polarization_form(&ring, &omega, 2).unwrap();
    let report = polarization_check(&ring, &slice, &psi).unwrap();
    c.check(report.pass && report.parity_ok, || format!("quadric weight 2: {report:?}"));

    // projective spaces, weight 0
    for n in 1..=4usize {
        let ring = ring_builtin(BuiltinRing::ProjectiveSpace(n)).unwrap();
        let omega = ring.ample_class().unwrap();
        let slice = primitive_slice(&ring, &omega, 0).unwrap();
        let psi = lefschetz_polarization_form(&ring, &omega, 0).unwrap();
        let report = polarization_check(&ring, &slice, &psi).unwrap();
        c.check(report.pass, || format!("P^{n} weight 0: {report:?}"));
    }

    // torus(2) weight-2 primitive slice, then restriction to the declared
    // sub-structure spanned by the (2,0) and (0,2) pieces
    let ring = ring_builtin(BuiltinRing::Torus(2)).unwrap();
    let omega = ring.ample_class().unwrap();
    let full = primitive_slice(&ring, &omega, 2).unwrap();
    let psi = lefschetz_polarization_form(&ring, &omega, 2).unwrap();
    let report = polarization_check(&ring, &full, &psi).unwrap();
    c.check(report.pass, || format!("torus(2) weight 2 full: {report:?}"));
    let sub = HodgeStructureSlice {
        weight: 2,
        spaces: full
            .spaces
            .iter()
            .filter(|((p, q), _)| (*p, *q) == (2, 0) || (*p, *q) == (0, 2))
            .cloned()
            .collect(),
    };
    c.check(sub.total_dim() == 2, || format!("sub-structure dim {}", sub.total_dim()));
    let sub_report = polarization_check(&ring, &sub, &psi).unwrap();
    c.check(sub_report.pass, || format!("torus(2) sub-structure: {sub_report:?}"));

    // degenerate Ψ = 0 fails
    let zero_psi = RingBilinearForm {
        multiplier: ring.zero_element(),
        scale: GaussRational::one(),
    };
    let zr = polarization_check(&ring, &full, &zero_psi).unwrap();
    c.check(!zr.pass && !zr.nondegenerate, || "zero form should fail".to_string());
    c.finish();
}

#[test]
fn acceptance_10_hodge_diamonds() {
    let mut c = Criterion::new(10, "Hodge-diamond identities on every builtin");
    let mut fixtures = passing_fixtures();
    fixtures.push(("pn:5".into(), ring_builtin(BuiltinRing::ProjectiveSpace(5)).unwrap()));
    fixtures.push(("blowup_p3".into(), ring_builtin(BuiltinRing::BlowupP3Point).unwrap()));
    for (name, ring) in fixtures {
        let d = hodge_diamond(&ring);
        for identity in &d.identities {
            c.check(identity.pass, || format!("{name}: identity {} fails", identity.id));
        }
        c.check(d.pass, || format!("{name}: diamond fails"));
    }
    c.finish();
}

#[test]
fn acceptance_11_contractibility() {
    let mut c = Criterion::new(11, "contractibility criterion, exact minors");
    let im = |m: usize, rows: Vec<Vec<i64>>| {
        IntersectionMatrix::new(
            m,
            rows.into_iter().map(|r| r.into_iter().map(rat_int).collect()).collect(),
        )
        .unwrap()
    };
    // m=1, [[−1]]
    c.check(
        contractibility_check(&im(1, vec![vec![-1]])).unwrap().consistent,
        || "[[-1]] should pass".to_string(),
    );
    // chain matrices up to size 5 (tridiagonal −2 / 1)
    for size in 1..=5usize {
        let rows: Vec<Vec<i64>> = (0..size)
            .map(|r| {
                (0..size)
                    .map(|col| {
                        if r == col {
                            -2
                        } else if r.abs_diff(col) == 1 {
                            1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        let report = contractibility_check(&im(1, rows)).unwrap();
        c.check(report.consistent, || format!("chain matrix size {size} should pass"));
        // minors of the negated chain matrix are 2, 3, …, size+1
        let expect: Vec<Rational> = (2..=size as i64 + 1).map(rat_int).collect();
        c.check(report.minors == expect, || format!("chain minors {:?}", report.minors));
    }
    // m=2, [[1]]
    c.check(
        contractibility_check(&im(2, vec![vec![1]])).unwrap().consistent,
        || "[[1]] at m=2 should pass".to_string(),
    );
    // failures: zero and indefinite
    c.check(
        !contractibility_check(&im(1, vec![vec![0]])).unwrap().consistent,
        || "[[0]] should fail".to_string(),
    );
    c.check(
        !contractibility_check(&im(1, vec![vec![-1, 2], vec![2, -1]])).unwrap().consistent,
        || "indefinite chain should fail".to_string(),
    );
    c.check(
        !contractibility_check(&im(2, vec![vec![-1]])).unwrap().consistent,
        || "[[-1]] at m=2 should fail".to_string(),
    );
    c.finish();
}

#[test]
fn acceptance_12_primitive_limit() {
    let mut c = Criterion::new(12, "primitive limit on the blown-up surface");
    let ring = ring_builtin(BuiltinRing::BlowupP2).unwrap();
    let m_class = ring.element_by_name("h").unwrap();
    let l_class = ring.ample_class().unwrap(); // 2h − e
    let eps: Vec<Rational> = (1..=10).map(|j| rat(1, 1i64 << j)).collect();
    let trace = primitive_limit(&ring, &m_class, &l_class, &eps).unwrap();
    c.check(trace.expected_dim == 1 && trace.limit_dim == 1, || {
        format!("limit dims {} / {}", trace.limit_dim, trace.expected_dim)
    });
    c.check(trace.steps.iter().all(|s| s.dim == 1), || "ε-kernel dimension drift".to_string());
    let gaps: Vec<f64> = trace.steps.iter().map(|s| s.gap_to_limit).collect();
    c.check(
        gaps.windows(2).all(|w| w[1] < w[0]),
        || format!("gaps not strictly decreasing: {gaps:?}"),
    );
    c.check(*gaps.last().unwrap() < 1e-2, || format!("final gap {}", gaps.last().unwrap()));
    c.check(trace.decomposition_ok, || "middle-degree decomposition".to_string());
    c.check(
        trace.polarization_positive && trace.polarization_minors == vec![rat_int(1)],
        || format!("polarization minors {:?}, expected [1]", trace.polarization_minors),
    );
    c.check(trace.pass, || "trace verdict".to_string());
    c.finish();
}
