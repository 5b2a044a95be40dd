//! Finite bigraded cohomology rings given by structure constants, with an
//! integration functional on the top degree, load-time certification, and
//! Hodge-diamond bookkeeping.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::bigraded::{to_real_basis, BigradedElement};
use crate::linalg::Mat;
use crate::multi_index::MultiIndex;
use crate::scalar::GaussRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("unknown basis name `{0}`")]
    UnknownName(String),
    #[error("basis class `{0}` has bidegree ({1},{2}) outside 0..={3}")]
    BadBidegree(String, usize, usize, usize),
    #[error("ring must have exactly one class of bidegree (0,0); found {0}")]
    BadUnit(usize),
    #[error("product `{0}`·`{1}` violates bidegree additivity")]
    BidegreeViolation(String, String),
    #[error("product `{0}`·`{1}` conflicts with graded commutativity")]
    NotGradedCommutative(String, String),
    #[error("associativity fails on (`{0}`·`{1}`)·`{2}`")]
    NotAssociative(String, String, String),
    #[error("integral must be supported on total degree {0}; `{1}` has degree {2}")]
    BadIntegralSupport(usize, String, usize),
    #[error("Poincaré pairing degenerate in degree {0}")]
    DegeneratePairing(usize),
    #[error("betti numbers asymmetric: b_{0} = {1} but b_{2} = {3}")]
    AsymmetricBetti(usize, usize, usize, usize),
    #[error("conjugation of `{0}` must land in bidegree ({1},{2})")]
    BadConjugation(String, usize, usize),
    #[error("conjugation is not an involution on `{0}`")]
    ConjugationNotInvolution(String),
    #[error("class `{0}` has p ≠ q and no conjugation table was supplied")]
    MissingConjugation(String),
    #[error("coefficient vector has length {0}, expected {1}")]
    BadVector(usize, usize),
    #[error("unknown builtin ring `{0}`")]
    UnknownBuiltin(String),
}

/// Named basis class of bidegree `(p, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisClass {
    pub name: String,
    pub p: usize,
    pub q: usize,
}

impl BasisClass {
    pub fn degree(&self) -> usize {
        self.p + self.q
    }
}

/// An element, as dense coefficients over the ring basis.
pub type RingElement = Vec<GaussRational>;

/// Sparse product table entry: coefficients of `basis[a] · basis[b]`.
pub type ProductEntry = Vec<(usize, GaussRational)>;

/// A finite graded-commutative bigraded ring with an integration functional,
/// certified at construction: bidegree additivity, graded commutativity,
/// associativity, integral support on the top degree, conjugation an
/// involution swapping `(p,q) ↔ (q,p)`, and a non-degenerate Poincaré
/// pairing in every degree.
#[derive(Clone, Debug)]
pub struct GradedRing {
    n: usize,
    basis: Vec<BasisClass>,
    mult: Vec<Vec<ProductEntry>>,
    integral: Vec<GaussRational>,
    conj: Vec<RingElement>,
    ample: Option<RingElement>,
}

/// Raw, uncertified ring data; `GradedRing::new` consumes it.
pub struct RingData {
    pub n: usize,
    pub basis: Vec<BasisClass>,
    /// (a, b, product) triples by name; missing pairs default to zero, or to
    /// the partner for products with the unit class. The transpose of a
    /// given pair may be omitted (filled by graded commutativity).
    pub products: Vec<(String, String, Vec<(String, GaussRational)>)>,
    /// Integration functional by name, on top-degree classes.
    pub integral: Vec<(String, GaussRational)>,
    /// Optional conjugation table by name; identity on (p,p) classes when
    /// omitted (an error if some class has p ≠ q).
    pub conj: Option<Vec<(String, Vec<(String, GaussRational)>)>>,
    /// Optional distinguished ample/Lefschetz class by name.
    pub ample: Option<Vec<(String, GaussRational)>>,
}

impl GradedRing {
    pub fn new(data: RingData) -> Result<Self, RingError> {
        let n = data.n;
        let dim = data.basis.len();
        let mut by_name: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, c) in data.basis.iter().enumerate() {
            if by_name.insert(&c.name, i).is_some() {
                return Err(RingError::DuplicateName(c.name.clone()));
            }
            if c.p > n || c.q > n {
                return Err(RingError::BadBidegree(c.name.clone(), c.p, c.q, n));
            }
        }
        let lookup = |name: &str| -> Result<usize, RingError> {
            by_name.get(name).copied().ok_or_else(|| RingError::UnknownName(name.to_string()))
        };

        let units: Vec<usize> =
            (0..dim).filter(|&i| data.basis[i].p == 0 && data.basis[i].q == 0).collect();
        if units.len() != 1 {
            return Err(RingError::BadUnit(units.len()));
        }
        let unit = units[0];

        // Assemble the product table.
        let mut mult: Vec<Vec<Option<ProductEntry>>> = vec![vec![None; dim]; dim];
        for (an, bn, out) in &data.products {
            let a = lookup(an)?;
            let b = lookup(bn)?;
            let mut entry: ProductEntry = Vec::new();
            for (name, c) in out {
                let t = lookup(name)?;
                if !c.is_zero() {
                    entry.push((t, c.clone()));
                }
            }
            entry.sort_by_key(|e| e.0);
            mult[a][b] = Some(entry);
        }
        // Unit products default to the partner; others to the graded
        // transpose when given, else zero.
        for a in 0..dim {
            for b in 0..dim {
                if mult[a][b].is_some() {
                    continue;
                }
                if a == unit {
                    mult[a][b] = Some(vec![(b, GaussRational::one())]);
                } else if b == unit {
                    mult[a][b] = Some(vec![(a, GaussRational::one())]);
                } else if let Some(t) = mult[b][a].clone() {
                    let sign_flip =
                        (data.basis[a].degree() * data.basis[b].degree()) % 2 == 1;
                    let flipped = t
                        .into_iter()
                        .map(|(i, c)| (i, if sign_flip { -c } else { c }))
                        .collect();
                    mult[a][b] = Some(flipped);
                } else {
                    mult[a][b] = Some(Vec::new());
                }
            }
        }
        let mult: Vec<Vec<ProductEntry>> =
            mult.into_iter().map(|row| row.into_iter().map(|e| e.unwrap()).collect()).collect();

        // Bidegree additivity (products beyond the top degree must vanish).
        for a in 0..dim {
            for b in 0..dim {
                let (tp, tq) =
                    (data.basis[a].p + data.basis[b].p, data.basis[a].q + data.basis[b].q);
                for (t, _) in &mult[a][b] {
                    if data.basis[*t].p != tp || data.basis[*t].q != tq {
                        return Err(RingError::BidegreeViolation(
                            data.basis[a].name.clone(),
                            data.basis[b].name.clone(),
                        ));
                    }
                }
            }
        }

        let mut integral = vec![GaussRational::zero(); dim];
        for (name, c) in &data.integral {
            let i = lookup(name)?;
            if data.basis[i].degree() != 2 * n && !c.is_zero() {
                return Err(RingError::BadIntegralSupport(
                    2 * n,
                    name.clone(),
                    data.basis[i].degree(),
                ));
            }
            integral[i] = c.clone();
        }

        // Conjugation table.
        let mut conj: Vec<RingElement> = Vec::with_capacity(dim);
        match &data.conj {
            None => {
                for c in &data.basis {
                    if c.p != c.q {
                        return Err(RingError::MissingConjugation(c.name.clone()));
                    }
                }
                for i in 0..dim {
                    let mut v = vec![GaussRational::zero(); dim];
                    v[i] = GaussRational::one();
                    conj.push(v);
                }
            }
            Some(table) => {
                let mut raw: Vec<Option<RingElement>> = vec![None; dim];
                for (name, out) in table {
                    let i = lookup(name)?;
                    let mut v = vec![GaussRational::zero(); dim];
                    for (tn, c) in out {
                        v[lookup(tn)?] = c.clone();
                    }
                    raw[i] = Some(v);
                }
                for (i, slot) in raw.into_iter().enumerate() {
                    conj.push(slot.unwrap_or_else(|| {
                        let mut v = vec![GaussRational::zero(); dim];
                        v[i] = GaussRational::one();
                        v
                    }));
                }
            }
        }

        let ample = match &data.ample {
            None => None,
            Some(entries) => {
                let mut v = vec![GaussRational::zero(); dim];
                for (name, c) in entries {
                    v[lookup(name)?] = c.clone();
                }
                Some(v)
            }
        };

        let ring = GradedRing { n, basis: data.basis, mult, integral, conj, ample };
        ring.certify()?;
        Ok(ring)
    }

    fn certify(&self) -> Result<(), RingError> {
        let dim = self.basis.len();
        // graded commutativity
        for a in 0..dim {
            for b in 0..=a {
                let ab = &self.mult[a][b];
                let ba = &self.mult[b][a];
                let sign = (self.basis[a].degree() * self.basis[b].degree()) % 2;
                let flipped: ProductEntry = ba
                    .iter()
                    .map(|(i, c)| (*i, if sign == 1 { -c } else { c.clone() }))
                    .collect();
                if *ab != flipped {
                    return Err(RingError::NotGradedCommutative(
                        self.basis[a].name.clone(),
                        self.basis[b].name.clone(),
                    ));
                }
            }
        }
        // associativity on basis triples
        for a in 0..dim {
            let ea = self.basis_element(a);
            for b in 0..dim {
                let eb = self.basis_element(b);
                let ab = self.mul(&ea, &eb)?;
                for c in 0..dim {
                    let ec = self.basis_element(c);
                    let bc = self.mul(&eb, &ec)?;
                    if self.mul(&ab, &ec)? != self.mul(&ea, &bc)? {
                        return Err(RingError::NotAssociative(
                            self.basis[a].name.clone(),
                            self.basis[b].name.clone(),
                            self.basis[c].name.clone(),
                        ));
                    }
                }
            }
        }
        // conjugation swaps bidegrees and is an involution
        for i in 0..dim {
            let (p, q) = (self.basis[i].p, self.basis[i].q);
            for (t, c) in self.conj[i].iter().enumerate() {
                if !c.is_zero() && (self.basis[t].p != q || self.basis[t].q != p) {
                    return Err(RingError::BadConjugation(self.basis[i].name.clone(), q, p));
                }
            }
            if self.conj_element(&self.conj_element(&self.basis_element(i)))
                != self.basis_element(i)
            {
                return Err(RingError::ConjugationNotInvolution(self.basis[i].name.clone()));
            }
        }
        // Poincaré pairing non-degenerate in every degree
        let betti = self.betti_numbers();
        for l in 0..=2 * self.n {
            if betti[l] != betti[2 * self.n - l] {
                return Err(RingError::AsymmetricBetti(
                    l,
                    betti[l],
                    2 * self.n - l,
                    betti[2 * self.n - l],
                ));
            }
            if betti[l] == 0 {
                continue;
            }
            let pairing = self.pairing_matrix(l)?;
            if pairing.rank() != betti[l] {
                return Err(RingError::DegeneratePairing(l));
            }
        }
        Ok(())
    }

    pub fn complex_dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[BasisClass] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, name: &str) -> Result<usize, RingError> {
        self.basis
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| RingError::UnknownName(name.to_string()))
    }

    pub fn zero_element(&self) -> RingElement {
        vec![GaussRational::zero(); self.basis.len()]
    }

    pub fn basis_element(&self, i: usize) -> RingElement {
        let mut v = self.zero_element();
        v[i] = GaussRational::one();
        v
    }

    pub fn element_by_name(&self, name: &str) -> Result<RingElement, RingError> {
        Ok(self.basis_element(self.index_of(name)?))
    }

    /// The distinguished ample/Lefschetz class, when the ring declares one.
    pub fn ample_class(&self) -> Option<RingElement> {
        self.ample.clone()
    }

    pub fn check_vector(&self, v: &RingElement) -> Result<(), RingError> {
        if v.len() != self.basis.len() {
            return Err(RingError::BadVector(v.len(), self.basis.len()));
        }
        Ok(())
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement, RingError> {
        self.check_vector(a)?;
        self.check_vector(b)?;
        let mut out = self.zero_element();
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let prod = ca * cb;
                for (t, c) in &self.mult[i][j] {
                    out[*t] += &(&prod * c);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, a: &RingElement, e: usize) -> Result<RingElement, RingError> {
        let mut out = self.basis_element(self.unit_index());
        for _ in 0..e {
            out = self.mul(&out, a)?;
        }
        Ok(out)
    }

    pub fn unit_index(&self) -> usize {
        self.basis.iter().position(|c| c.p == 0 && c.q == 0).expect("certified unit")
    }

    pub fn integrate(&self, a: &RingElement) -> Result<GaussRational, RingError> {
        self.check_vector(a)?;
        let mut acc = GaussRational::zero();
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                acc += &(c * &self.integral[i]);
            }
        }
        Ok(acc)
    }

    /// `∫ a·b`.
    pub fn intersection(
        &self,
        a: &RingElement,
        b: &RingElement,
    ) -> Result<GaussRational, RingError> {
        self.integrate(&self.mul(a, b)?)
    }

    pub fn conj_element(&self, a: &RingElement) -> RingElement {
        let mut out = self.zero_element();
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cc = c.conj();
            for (t, w) in self.conj[i].iter().enumerate() {
                if !w.is_zero() {
                    out[t] += &(&cc * w);
                }
            }
        }
        out
    }

    pub fn is_real_element(&self, a: &RingElement) -> bool {
        self.conj_element(a) == *a
    }

    /// The Weil operator on ring coefficients: `i^{p−q}` per class.
    pub fn weil_element(&self, a: &RingElement) -> RingElement {
        a.iter()
            .enumerate()
            .map(|(i, c)| {
                let f = GaussRational::i_pow(self.basis[i].p as i64 - self.basis[i].q as i64);
                c * &f
            })
            .collect()
    }

    /// Indices of basis classes of total degree `l`.
    pub fn degree_indices(&self, l: usize) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.basis[i].degree() == l).collect()
    }

    /// Indices of basis classes of bidegree `(p,q)`.
    pub fn bidegree_indices(&self, p: usize, q: usize) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| self.basis[i].p == p && self.basis[i].q == q)
            .collect()
    }

    /// Keep only the `(p,q)`-coordinates of `a`.
    pub fn project_bidegree(&self, a: &RingElement, p: usize, q: usize) -> RingElement {
        a.iter()
            .enumerate()
            .map(|(i, c)| {
                if self.basis[i].p == p && self.basis[i].q == q {
                    c.clone()
                } else {
                    GaussRational::zero()
                }
            })
            .collect()
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        let mut b = vec![0usize; 2 * self.n + 1];
        for c in &self.basis {
            b[c.degree()] += 1;
        }
        b
    }

    pub fn hodge_numbers(&self) -> Vec<Vec<usize>> {
        let mut h = vec![vec![0usize; self.n + 1]; self.n + 1];
        for c in &self.basis {
            h[c.p][c.q] += 1;
        }
        h
    }

    /// Matrix of `(a,b) ↦ ∫ a·b` between degree `l` and degree `2n−l` bases.
    pub fn pairing_matrix(&self, l: usize) -> Result<Mat, RingError> {
        let rows = self.degree_indices(l);
        let cols = self.degree_indices(2 * self.n - l);
        let mut m = Mat::zero(rows.len(), cols.len());
        for (r, &i) in rows.iter().enumerate() {
            for (c, &j) in cols.iter().enumerate() {
                *m.at_mut(r, c) =
                    self.intersection(&self.basis_element(i), &self.basis_element(j))?;
            }
        }
        Ok(m)
    }
}

// ---------------------------------------------------------------------------
// Builtins
// ---------------------------------------------------------------------------

/// Builtin ring fixtures.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BuiltinRing {
    /// `H*(P^n)`: one class `w^p` per bidegree (p,p), `∫ w^n = 1`.
    ProjectiveSpace(usize),
    /// `H*(C^n/Λ)`: the exterior algebra on `dz_j, dz̄_j` with unit real
    /// volume.
    Torus(usize),
    /// The smooth quadric surface: `H²` spanned by the two rulings.
    QuadricSurface,
    /// `P¹×P¹` (the same ring as the quadric surface).
    ProductP1P1,
    /// `P²` blown up at a point: `H²` spanned by hyperplane and exceptional
    /// classes.
    BlowupP2,
    /// `P³` blown up at a point; the pullback class kills the exceptional
    /// divisor class.
    BlowupP3Point,
}

impl BuiltinRing {
    /// Parse aliases like `pn:4`, `torus:2`, `quadric`, `p1xp1`,
    /// `blowup_p2`, `blowup_p3`.
    pub fn parse(s: &str) -> Result<Self, RingError> {
        let err = || RingError::UnknownBuiltin(s.to_string());
        if let Some(rest) = s.strip_prefix("pn:") {
            return Ok(BuiltinRing::ProjectiveSpace(rest.parse().map_err(|_| err())?));
        }
        if let Some(rest) = s.strip_prefix("torus:") {
            return Ok(BuiltinRing::Torus(rest.parse().map_err(|_| err())?));
        }
        match s {
            "quadric" => Ok(BuiltinRing::QuadricSurface),
            "p1xp1" => Ok(BuiltinRing::ProductP1P1),
            "blowup_p2" => Ok(BuiltinRing::BlowupP2),
            "blowup_p3" => Ok(BuiltinRing::BlowupP3Point),
            _ => Err(err()),
        }
    }
}

/// Construct a builtin ring, certified.
pub fn ring_builtin(kind: BuiltinRing) -> Result<GradedRing, RingError> {
    match kind {
        BuiltinRing::ProjectiveSpace(n) => projective_space(n),
        BuiltinRing::Torus(n) => torus(n),
        BuiltinRing::QuadricSurface => two_ruling_surface(),
        BuiltinRing::ProductP1P1 => two_ruling_surface(),
        BuiltinRing::BlowupP2 => blowup_p2(),
        BuiltinRing::BlowupP3Point => blowup_p3_point(),
    }
}

fn gr(n: i64) -> GaussRational {
    GaussRational::from_int(n)
}

fn projective_space(n: usize) -> Result<GradedRing, RingError> {
    assert!(n >= 1, "projective space needs n >= 1");
    let name = |p: usize| if p == 0 { "1".to_string() } else { format!("w{p}") };
    let basis = (0..=n).map(|p| BasisClass { name: name(p), p, q: p }).collect();
    let mut products = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            let out = if a + b <= n { vec![(name(a + b), gr(1))] } else { Vec::new() };
            products.push((name(a), name(b), out));
        }
    }
    GradedRing::new(RingData {
        n,
        basis,
        products,
        integral: vec![(name(n), gr(1))],
        conj: None,
        ample: Some(vec![(name(1), gr(1))]),
    })
}

/// Name of the torus basis class for `dz_I ∧ dz̄_J`.
fn torus_name(i: &MultiIndex, j: &MultiIndex) -> String {
    if i.degree() == 0 && j.degree() == 0 {
        return "1".to_string();
    }
    let mut s = String::new();
    for a in i.indices() {
        let _ = write!(s, "z{a}");
    }
    for b in j.indices() {
        let _ = write!(s, "b{b}");
    }
    s
}

fn torus(n: usize) -> Result<GradedRing, RingError> {
    assert!((1..=3).contains(&n), "torus builtin supports n in 1..=3");
    let mut keys: Vec<(MultiIndex, MultiIndex)> = Vec::new();
    for p in 0..=n {
        for q in 0..=n {
            for i in MultiIndex::all(n, p) {
                for j in MultiIndex::all(n, q) {
                    keys.push((i.clone(), j));
                }
            }
        }
    }
    let basis: Vec<BasisClass> = keys
        .iter()
        .map(|(i, j)| BasisClass { name: torus_name(i, j), p: i.degree(), q: j.degree() })
        .collect();

    let elem = |i: &MultiIndex, j: &MultiIndex| {
        BigradedElement::basis(n, i.clone(), j.clone()).expect("valid index")
    };
    // expand a bigraded element back into named coefficients
    let expand = |u: &BigradedElement| -> Vec<(String, GaussRational)> {
        u.terms().map(|((i, j), c)| (torus_name(i, j), c.clone())).collect()
    };

    let mut products = Vec::new();
    for (ia, ja) in &keys {
        for (ib, jb) in &keys {
            let w = elem(ia, ja).wedge(&elem(ib, jb)).expect("same dim");
            products.push((torus_name(ia, ja), torus_name(ib, jb), expand(&w)));
        }
    }

    // ∫ dz_N ∧ dz̄_N is fixed by unit real volume: the coefficient of the
    // real top form x₁*∧y₁*∧…∧x_n*∧y_n* is inverted.
    let top = MultiIndex::top(n);
    let top_real = to_real_basis(&elem(&top, &top)).expect("dims agree");
    let vol = top_real.coeff(&MultiIndex::top(2 * n));
    let integral = vec![(torus_name(&top, &top), vol)];

    let conj = keys
        .iter()
        .map(|(i, j)| {
            let c = elem(i, j).conj();
            (torus_name(i, j), expand(&c))
        })
        .collect();

    // ω = Σ_j (i/2) dz_j ∧ dz̄_j, the Euclidean Kähler class
    let i_half = GaussRational::from_parts(0, 1, 1, 2);
    let ample = (1..=n)
        .map(|j| (torus_name(&MultiIndex::single(j), &MultiIndex::single(j)), i_half.clone()))
        .collect();

    GradedRing::new(RingData { n, basis, products, integral, conj: Some(conj), ample: Some(ample) })
}

fn two_ruling_surface() -> Result<GradedRing, RingError> {
    let basis = vec![
        BasisClass { name: "1".into(), p: 0, q: 0 },
        BasisClass { name: "a".into(), p: 1, q: 1 },
        BasisClass { name: "b".into(), p: 1, q: 1 },
        BasisClass { name: "pt".into(), p: 2, q: 2 },
    ];
    let products = vec![
        ("a".into(), "a".into(), vec![]),
        ("b".into(), "b".into(), vec![]),
        ("a".into(), "b".into(), vec![("pt".into(), gr(1))]),
    ];
    GradedRing::new(RingData {
        n: 2,
        basis,
        products,
        integral: vec![("pt".into(), gr(1))],
        conj: None,
        ample: Some(vec![("a".into(), gr(1)), ("b".into(), gr(1))]),
    })
}

fn blowup_p2() -> Result<GradedRing, RingError> {
    let basis = vec![
        BasisClass { name: "1".into(), p: 0, q: 0 },
        BasisClass { name: "h".into(), p: 1, q: 1 },
        BasisClass { name: "e".into(), p: 1, q: 1 },
        BasisClass { name: "pt".into(), p: 2, q: 2 },
    ];
    let products = vec![
        ("h".into(), "h".into(), vec![("pt".into(), gr(1))]),
        ("e".into(), "e".into(), vec![("pt".into(), gr(-1))]),
        ("h".into(), "e".into(), vec![]),
    ];
    GradedRing::new(RingData {
        n: 2,
        basis,
        products,
        integral: vec![("pt".into(), gr(1))],
        conj: None,
        // 2h − e is ample on the blow-up
        ample: Some(vec![("h".into(), gr(2)), ("e".into(), gr(-1))]),
    })
}

fn blowup_p3_point() -> Result<GradedRing, RingError> {
    let basis = vec![
        BasisClass { name: "1".into(), p: 0, q: 0 },
        BasisClass { name: "h".into(), p: 1, q: 1 },
        BasisClass { name: "e".into(), p: 1, q: 1 },
        BasisClass { name: "h2".into(), p: 2, q: 2 },
        BasisClass { name: "e2".into(), p: 2, q: 2 },
        BasisClass { name: "pt".into(), p: 3, q: 3 },
    ];
    // h·e = 0 is the load-bearing relation; h³ = e³ = pt keeps the pairing
    // non-degenerate.
    let products = vec![
        ("h".into(), "h".into(), vec![("h2".into(), gr(1))]),
        ("e".into(), "e".into(), vec![("e2".into(), gr(1))]),
        ("h".into(), "e".into(), vec![]),
        ("h".into(), "h2".into(), vec![("pt".into(), gr(1))]),
        ("e".into(), "e2".into(), vec![("pt".into(), gr(1))]),
        ("h".into(), "e2".into(), vec![]),
        ("e".into(), "h2".into(), vec![]),
    ];
    GradedRing::new(RingData {
        n: 3,
        basis,
        products,
        integral: vec![("pt".into(), gr(1))],
        conj: None,
        ample: None,
    })
}

// ---------------------------------------------------------------------------
// Hodge diamond
// ---------------------------------------------------------------------------

/// One named identity verdict in the diamond report.
#[derive(Clone, Debug)]
pub struct DiamondIdentity {
    pub id: String,
    pub description: String,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct DiamondReport {
    pub n: usize,
    pub hodge_numbers: Vec<Vec<usize>>,
    pub betti: Vec<usize>,
    pub identities: Vec<DiamondIdentity>,
    pub pass: bool,
}

impl DiamondReport {
    /// Aligned-text rendering of the diamond, one row per total degree.
    pub fn to_text(&self) -> String {
        let n = self.n;
        let width = 4;
        let mut out = String::new();
        for l in 0..=2 * n {
            let entries: Vec<String> = (l.saturating_sub(n)..=l.min(n))
                .map(|p| format!("{:^width$}", self.hodge_numbers[p][l - p]))
                .collect();
            let pad = (2 * n - l.min(2 * n - l)) * width / 2;
            let _ = writeln!(out, "{}{}", " ".repeat(pad), entries.join(""));
        }
        out
    }
}

/// Compute the Hodge diamond of a ring and check the Hodge-number
/// identities: corners equal 1, central and conjugation symmetry, Betti
/// sums, `h^{p,p} ≥ 1`, odd Betti numbers even, even Betti numbers positive.
pub fn hodge_diamond(ring: &GradedRing) -> DiamondReport {
    let n = ring.complex_dim();
    let h = ring.hodge_numbers();
    let betti = ring.betti_numbers();
    let mut identities = Vec::new();
    let mut push = |id: &str, description: &str, pass: bool| {
        identities.push(DiamondIdentity {
            id: id.to_string(),
            description: description.to_string(),
            pass,
        });
    };

    push("pqid2", "h^{0,0} = h^{n,n} = 1", h[0][0] == 1 && h[n][n] == 1);

    let mut central = true;
    let mut conj_sym = true;
    for p in 0..=n {
        for q in 0..=n {
            if h[p][q] != h[n - p][n - q] {
                central = false;
            }
            if h[p][q] != h[q][p] {
                conj_sym = false;
            }
        }
    }
    push("pqid3", "h^{p,q} = h^{n-p,n-q}", central);
    push("pqid4", "h^{p,q} = h^{q,p}", conj_sym);

    let mut sums = true;
    for (l, &bl) in betti.iter().enumerate() {
        let s: usize = (l.saturating_sub(n)..=l.min(n)).map(|p| h[p][l - p]).sum();
        if s != bl {
            sums = false;
        }
    }
    push("pqid5", "b_l = sum of h^{p,q} over p+q=l", sums);

    push("pqid6", "h^{p,p} >= 1", (0..=n).all(|p| h[p][p] >= 1));
    push(
        "b-odd-even",
        "odd Betti numbers are even",
        betti.iter().enumerate().all(|(l, &b)| l % 2 == 0 || b % 2 == 0),
    );
    push("cckmt", "b_{2k} > 0", (0..=n).all(|k| betti[2 * k] > 0));

    let pass = identities.iter().all(|i| i.pass);
    DiamondReport { n, hodge_numbers: h, betti, identities, pass }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_space_ring() {
        let ring = ring_builtin(BuiltinRing::ProjectiveSpace(3)).unwrap();
        assert_eq!(ring.betti_numbers(), vec![1, 0, 1, 0, 1, 0, 1]);
        let w = ring.element_by_name("w1").unwrap();
        let w3 = ring.pow(&w, 3).unwrap();
        assert_eq!(ring.integrate(&w3).unwrap(), GaussRational::one());
        let w4 = ring.pow(&w, 4).unwrap();
        assert!(w4.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn torus_ring_normalization() {
        let ring = ring_builtin(BuiltinRing::Torus(1)).unwrap();
        // H¹ = ⟨dz, dz̄⟩ and ∫ dz∧dz̄ = −2i
        assert_eq!(ring.betti_numbers(), vec![1, 2, 1]);
        let dz = ring.element_by_name("z1").unwrap();
        let dzb = ring.element_by_name("b1").unwrap();
        assert_eq!(
            ring.intersection(&dz, &dzb).unwrap(),
            GaussRational::from_parts(0, 1, -2, 1)
        );
        // ∫ ω = 1 for the Euclidean Kähler class
        let omega = ring.ample_class().unwrap();
        assert_eq!(ring.integrate(&omega).unwrap(), GaussRational::one());
        // conjugation swaps dz and dz̄
        assert_eq!(ring.conj_element(&dz), dzb);
    }

    #[test]
    fn torus2_volume_normalized() {
        let ring = ring_builtin(BuiltinRing::Torus(2)).unwrap();
        let omega = ring.ample_class().unwrap();
        let omega2 = ring.pow(&omega, 2).unwrap();
        // ∫ ω² = 2! for unit volume
        assert_eq!(ring.integrate(&omega2).unwrap(), GaussRational::from_int(2));
        assert_eq!(ring.betti_numbers(), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn quadric_ring() {
        let ring = ring_builtin(BuiltinRing::QuadricSurface).unwrap();
        assert_eq!(ring.hodge_numbers()[1][1], 2);
        let a = ring.element_by_name("a").unwrap();
        let b = ring.element_by_name("b").unwrap();
        assert_eq!(ring.intersection(&a, &b).unwrap(), GaussRational::one());
        assert_eq!(ring.intersection(&a, &a).unwrap(), GaussRational::zero());
    }

    #[test]
    fn blowup_p2_ring() {
        let ring = ring_builtin(BuiltinRing::BlowupP2).unwrap();
        let h = ring.element_by_name("h").unwrap();
        let e = ring.element_by_name("e").unwrap();
        assert_eq!(ring.intersection(&h, &h).unwrap(), GaussRational::one());
        assert_eq!(ring.intersection(&e, &e).unwrap(), -GaussRational::one());
        assert_eq!(ring.intersection(&h, &e).unwrap(), GaussRational::zero());
    }

    #[test]
    fn certification_rejects_bad_rings() {
        // degenerate degree-1 pairing
        let bad = RingData {
            n: 1,
            basis: vec![
                BasisClass { name: "1".into(), p: 0, q: 0 },
                BasisClass { name: "x".into(), p: 1, q: 0 },
                BasisClass { name: "y".into(), p: 0, q: 1 },
                BasisClass { name: "pt".into(), p: 1, q: 1 },
            ],
            products: vec![
                ("x".into(), "x".into(), vec![]),
                ("y".into(), "y".into(), vec![]),
                ("x".into(), "y".into(), vec![]),
            ],
            integral: vec![("pt".into(), gr(1))],
            conj: Some(vec![
                ("x".into(), vec![("y".into(), gr(1))]),
                ("y".into(), vec![("x".into(), gr(1))]),
            ]),
            ample: None,
        };
        assert_eq!(GradedRing::new(bad).unwrap_err(), RingError::DegeneratePairing(1));

        // bidegree violation
        let bad2 = RingData {
            n: 1,
            basis: vec![
                BasisClass { name: "1".into(), p: 0, q: 0 },
                BasisClass { name: "t".into(), p: 1, q: 1 },
            ],
            products: vec![("t".into(), "t".into(), vec![("t".into(), gr(1))])],
            integral: vec![("t".into(), gr(1))],
            conj: None,
            ample: None,
        };
        assert!(matches!(GradedRing::new(bad2), Err(RingError::BidegreeViolation(_, _))));

        // p ≠ q without a conjugation table
        let bad3 = RingData {
            n: 1,
            basis: vec![
                BasisClass { name: "1".into(), p: 0, q: 0 },
                BasisClass { name: "x".into(), p: 1, q: 0 },
            ],
            products: vec![],
            integral: vec![],
            conj: None,
            ample: None,
        };
        assert!(matches!(GradedRing::new(bad3), Err(RingError::MissingConjugation(_))));
    }

    #[test]
    fn graded_commutativity_on_torus() {
        let ring = ring_builtin(BuiltinRing::Torus(2)).unwrap();
        // odd·odd anticommutes: dz₁·dz̄₁ = −dz̄₁·dz₁
        let dz = ring.element_by_name("z1").unwrap();
        let dzb = ring.element_by_name("b1").unwrap();
        let ab = ring.mul(&dz, &dzb).unwrap();
        let ba = ring.mul(&dzb, &dz).unwrap();
        let neg: RingElement = ba.iter().map(|c| -c).collect();
        assert_eq!(ab, neg);
    }

    #[test]
    fn diamond_reports() {
        let d = hodge_diamond(&ring_builtin(BuiltinRing::ProjectiveSpace(3)).unwrap());
        assert!(d.pass);
        for p in 0..=3 {
            for q in 0..=3 {
                assert_eq!(d.hodge_numbers[p][q], usize::from(p == q));
            }
        }

        let d = hodge_diamond(&ring_builtin(BuiltinRing::Torus(2)).unwrap());
        assert!(d.pass);
        for p in 0..=2 {
            for q in 0..=2 {
                let c = |k: usize| [1usize, 2, 1][k];
                assert_eq!(d.hodge_numbers[p][q], c(p) * c(q));
            }
        }

        let d = hodge_diamond(&ring_builtin(BuiltinRing::QuadricSurface).unwrap());
        assert!(d.pass);
        assert_eq!(d.hodge_numbers[1][1], 2);
        assert_eq!(d.hodge_numbers[0][0], 1);
        assert_eq!(d.hodge_numbers[2][2], 1);
        assert_eq!(d.hodge_numbers[0][1], 0);
        assert!(d.to_text().contains('2'));
    }

    #[test]
    fn builtin_parsing() {
        assert_eq!(BuiltinRing::parse("pn:4").unwrap(), BuiltinRing::ProjectiveSpace(4));
        assert_eq!(BuiltinRing::parse("torus:2").unwrap(), BuiltinRing::Torus(2));
        assert_eq!(BuiltinRing::parse("quadric").unwrap(), BuiltinRing::QuadricSurface);
        assert!(BuiltinRing::parse("nope").is_err());
    }
}
