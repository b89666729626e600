//! Krull–Schmidt decomposition by Fitting splits, indecomposability certificates and
//! isomorphism tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::rep::{hom_space, RepMorphism, Representation};

/// Candidate endomorphisms tried per split level.
pub const CANDIDATE_BUDGET: usize = 64;
/// Basis elements plus pairwise sums and differences stop here; the rest are random.
const DETERMINISTIC_BUDGET: usize = 48;
/// Seed of the random phase of every candidate search.
pub const SEARCH_SEED: u64 = 0x5155_4956_4552;
/// Exhaustive search over a finite `End(V)` is attempted up to this many elements.
const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

/// Basis of `End(v)`.
pub fn end_algebra<F: Field>(v: &Representation<F>) -> Vec<RepMorphism<F>> {
    hom_space(v, v).expect("same quiver")
}

/// `v = ker φⁿ ⊕ im φⁿ`, as two subrepresentations with their inclusions.
#[derive(Clone, Debug)]
pub struct Split<F: Field> {
    pub parts: [Representation<F>; 2],
    pub inclusions: [RepMorphism<F>; 2],
}

/// Fitting decomposition of `v` along `phi`, `n` the total dimension.
///
/// `None` when one side is zero, i.e. `phi` is nilpotent or invertible.
pub fn fitting_split<F: Field>(v: &Representation<F>, phi: &RepMorphism<F>) -> Result<Option<Split<F>>> {
    if phi.source() != v || phi.target() != v {
        return Err(Error::NotEndomorphism);
    }
    Ok(fitting_split_unchecked(v, phi))
}

fn fitting_split_unchecked<F: Field>(v: &Representation<F>, phi: &RepMorphism<F>) -> Option<Split<F>> {
    let n = v.total_dim() as u32;
    let powers: Vec<Matrix<F>> = phi.comps().iter().map(|m| m.pow(n)).collect();
    let kernels: Vec<Subspace<F>> = powers.iter().map(Matrix::kernel).collect();
    if kernels.iter().all(Subspace::is_zero) || kernels.iter().all(Subspace::is_full) {
        return None;
    }
    let images: Vec<Subspace<F>> = powers.iter().map(Matrix::image).collect();
    let (k, ki) = v.subrepresentation(&kernels).expect("kernel of an endomorphism is invariant");
    let (i, ii) = v.subrepresentation(&images).expect("image of an endomorphism is invariant");
    Some(Split { parts: [k, i], inclusions: [ki, ii] })
}

/// Gram matrix of `(x, y) ↦ tr_V(xy)` on a basis of `End(V)`.
///
/// In characteristic 0 its kernel is exactly the radical: it is a nil ideal, and every
/// element of the radical has nilpotent products.
pub fn trace_form<F: Field>(basis: &[RepMorphism<F>]) -> Matrix<F> {
    let d = basis.len();
    let mut g = Matrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let t = trace_of_product(&basis[i], &basis[j]);
            g[(i, j)] = t.clone();
            g[(j, i)] = t;
        }
    }
    g
}

fn trace_of_product<F: Field>(x: &RepMorphism<F>, y: &RepMorphism<F>) -> F {
    let mut acc = F::zero();
    for (a, b) in x.comps().iter().zip(y.comps()) {
        for k in 0..a.rows() {
            for l in 0..a.cols() {
                let (p, q) = (&a[(k, l)], &b[(l, k)]);
                if !p.is_zero() && !q.is_zero() {
                    acc = acc + p.clone() * q.clone();
                }
            }
        }
    }
    acc
}

/// `dim End(V)/rad End(V)` in characteristic 0.
pub fn semisimple_dim<F: Field>(basis: &[RepMorphism<F>]) -> Result<usize> {
    if F::characteristic() != 0 {
        return Err(Error::Characteristic);
    }
    Ok(trace_form(basis).rank())
}

/// Deterministic sequence of candidate endomorphisms for the split search.
fn candidates<F: Field>(basis: &[RepMorphism<F>]) -> Vec<RepMorphism<F>> {
    let d = basis.len();
    let mut out: Vec<RepMorphism<F>> = basis.iter().take(CANDIDATE_BUDGET).cloned().collect();
    'pairs: for i in 0..d {
        for j in i + 1..d {
            for f in [basis[i].add(&basis[j]), basis[i].sub(&basis[j])] {
                if out.len() >= DETERMINISTIC_BUDGET.max(d.min(CANDIDATE_BUDGET)) {
                    break 'pairs;
                }
                out.push(f.expect("parallel"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEARCH_SEED);
    while out.len() < CANDIDATE_BUDGET && d > 1 {
        let coeffs: Vec<F> = (0..d).map(|_| F::from_i64(rng.gen_range(-2..=2))).collect();
        out.push(RepMorphism::combination(basis, &coeffs).expect("parallel"));
    }
    out
}

/// Eigenvalues in `F` of an endomorphism, over all vertices.
fn eigenvalues<F: Field>(phi: &RepMorphism<F>) -> Vec<F> {
    let mut roots = Vec::new();
    for m in phi.comps() {
        if m.rows() == 0 {
            continue;
        }
        roots.extend(F::roots(&m.char_poly().expect("square")));
    }
    roots.sort();
    roots.dedup();
    roots
}

/// First proper Fitting split among `φ − λ` over the candidate sequence.
fn search_split<F: Field>(v: &Representation<F>, basis: &[RepMorphism<F>]) -> Option<Split<F>> {
    for phi in candidates(basis) {
        let ev = eigenvalues(&phi);
        if ev.len() < 2 {
            // a single eigenvalue λ makes φ − λ nilpotent
            continue;
        }
        for lambda in ev {
            let shifted = phi.shift(&lambda).expect("endomorphism");
            if let Some(s) = fitting_split_unchecked(v, &shifted) {
                return Some(s);
            }
        }
    }
    None
}

/// Exhaustive split search over a finite `End(V)`.
fn exhaustive_split<F: Field>(v: &Representation<F>, basis: &[RepMorphism<F>]) -> Option<Option<Split<F>>> {
    let elems = F::elements()?;
    let q = elems.len() as u64;
    let count = q.checked_pow(basis.len() as u32).filter(|&c| c <= EXHAUSTIVE_LIMIT)?;
    let mut coeffs = vec![0usize; basis.len()];
    for _ in 0..count {
        let c: Vec<F> = coeffs.iter().map(|&i| elems[i].clone()).collect();
        let phi = RepMorphism::combination(basis, &c).expect("parallel");
        if let Some(s) = fitting_split_unchecked(v, &phi) {
            return Some(Some(s));
        }
        for slot in coeffs.iter_mut() {
            *slot += 1;
            if *slot < elems.len() {
                break;
            }
            *slot = 0;
        }
    }
    Some(None)
}

/// A proper splitting of `v`, or `Ok(None)` when `v` is certified indecomposable.
fn split<F: Field>(v: &Representation<F>) -> Result<Option<Split<F>>> {
    if v.is_zero() {
        return Err(Error::ZeroRepresentation);
    }
    let basis = end_algebra(v);
    if F::characteristic() == 0 {
        if semisimple_dim(&basis)? == 1 {
            return Ok(None);
        }
        return match search_split(v, &basis) {
            Some(s) => Ok(Some(s)),
            None => Err(Error::Undecided(format!(
                "no split found for a part with dimension vector {:?}",
                v.dims()
            ))),
        };
    }
    match exhaustive_split(v, &basis) {
        Some(found) => Ok(found),
        None => Err(Error::Undecided(format!(
            "End of a part with dimension vector {:?} is too large to enumerate",
            v.dims()
        ))),
    }
}

/// Whether `v` is indecomposable.
///
/// Over the rationals: `End(V)/rad` of dimension 1 certifies yes, a Fitting split
/// certifies no, anything else is undecided. Over a small prime field the finite
/// endomorphism algebra is searched exhaustively for a split.
pub fn is_indec<F: Field>(v: &Representation<F>) -> Result<bool> {
    Ok(split(v)?.is_none())
}

/// Indecomposable summands with their inclusions into the decomposed representation.
#[derive(Clone, Debug)]
pub struct Decomposition<F: Field> {
    pub parts: Vec<Representation<F>>,
    pub inclusions: Vec<RepMorphism<F>>,
}

impl<F: Field> Decomposition<F> {
    /// The morphism `⊕ parts → v` assembled from the inclusions.
    pub fn reassembly(&self, v: &Representation<F>) -> Result<RepMorphism<F>> {
        let sum = Representation::direct_sum_all(v.quiver().clone(), &self.parts)?;
        let comps = (0..v.dims().len())
            .map(|x| {
                let blocks: Vec<&Matrix<F>> = self.inclusions.iter().map(|f| f.comp(x)).collect();
                Matrix::hstack(&blocks, v.dim(x))
            })
            .collect();
        RepMorphism::new(&sum, v, comps)
    }

    pub fn dims(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(|p| p.dims().to_vec()).collect()
    }
}

/// Krull–Schmidt decomposition over the rationals.
///
/// Parts are ordered by dimension vector, ties in order of discovery.
pub fn decompose<F: Field>(v: &Representation<F>) -> Result<Decomposition<F>> {
    if F::characteristic() != 0 {
        return Err(Error::Characteristic);
    }
    let mut parts = Vec::new();
    let mut inclusions = Vec::new();
    if !v.is_zero() {
        decompose_into(v, RepMorphism::identity(v), &mut parts, &mut inclusions)?;
    }
    let mut order: Vec<usize> = (0..parts.len()).collect();
    order.sort_by(|&a, &b| parts[a].dims().cmp(parts[b].dims()));
    Ok(Decomposition {
        parts: order.iter().map(|&i| parts[i].clone()).collect(),
        inclusions: order.iter().map(|&i| inclusions[i].clone()).collect(),
    })
}

fn decompose_into<F: Field>(
    v: &Representation<F>,
    into_root: RepMorphism<F>,
    parts: &mut Vec<Representation<F>>,
    inclusions: &mut Vec<RepMorphism<F>>,
) -> Result<()> {
    match split(v)? {
        None => {
            parts.push(v.clone());
            inclusions.push(into_root);
        }
        Some(s) => {
            for (p, i) in s.parts.iter().zip(&s.inclusions) {
                decompose_into(p, into_root.compose(i)?, parts, inclusions)?;
            }
        }
    }
    Ok(())
}

/// Whether `v ≅ w`.
///
/// Looks for an invertible element of `Hom(v, w)`; otherwise decides through the
/// radical of `End(v)` when that ring is local, and through Krull–Schmidt when not.
pub fn iso<F: Field>(v: &Representation<F>, w: &Representation<F>) -> Result<bool> {
    if **v.quiver() != **w.quiver() {
        return Err(Error::QuiverMismatch);
    }
    if v.dims() != w.dims() {
        return Ok(false);
    }
    if v.is_zero() {
        return Ok(true);
    }
    if v == w {
        return Ok(true);
    }
    let fwd = hom_space(v, w)?;
    let back = hom_space(w, v)?;
    if fwd.is_empty() || back.is_empty() {
        return Ok(false);
    }
    if candidates(&fwd).iter().any(RepMorphism::is_iso) {
        return Ok(true);
    }
    if F::characteristic() != 0 {
        return Err(Error::Undecided("isomorphism over a prime field".into()));
    }
    let end_v = end_algebra(v);
    if end_v.len() != end_algebra(w).len() {
        return Ok(false);
    }
    let g = trace_form(&end_v);
    if g.rank() == 1 {
        // Local End(v): an iso exists iff some g∘f lies outside the radical.
        for f in &fwd {
            for h in &back {
                let c = h.compose(f)?;
                let row: Vec<F> = end_v.iter().map(|b| trace_of_product(&c, b)).collect();
                if row.iter().any(|t| !t.is_zero()) {
                    return Ok(true);
                }
            }
        }
        return Ok(false);
    }
    // Compare Krull–Schmidt multisets.
    let (dv, dw) = (decompose(v)?, decompose(w)?);
    if dv.dims() != dw.dims() {
        return Ok(false);
    }
    let mut used = vec![false; dw.parts.len()];
    for p in &dv.parts {
        let mut matched = false;
        for (j, r) in dw.parts.iter().enumerate() {
            if !used[j] && p.dims() == r.dims() && iso(p, r)? {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::field::{Rational, F2};
    use crate::quiver::Quiver;

    type M = Matrix<Rational>;
    type R = Representation<Rational>;

    fn a3() -> Arc<Quiver> {
        Arc::new(Quiver::new(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")]).unwrap())
    }

    fn one_plus_s2() -> R {
        R::new(a3(), vec![1, 2, 1], vec![M::from_ints(2, 1, &[1, 0]), M::from_ints(1, 2, &[1, 0])]).unwrap()
    }

    #[test]
    fn end_dimensions() {
        let one = R::identity(a3());
        assert_eq!(end_algebra(&one).len(), 1);
        assert_eq!(end_algebra(&one.direct_sum(&one).unwrap()).len(), 4);
    }

    #[test]
    fn fitting_on_evident_idempotent() {
        let v = one_plus_s2();
        // projection onto the second coordinate at vertex 2 and zero elsewhere
        let e = RepMorphism::new(
            &v,
            &v,
            vec![M::zeros(1, 1), M::from_ints(2, 2, &[0, 0, 0, 1]), M::zeros(1, 1)],
        )
        .unwrap();
        let s = fitting_split(&v, &e).unwrap().unwrap();
        assert_eq!(s.parts[0].dims(), &[1, 1, 1]);
        assert_eq!(s.parts[1].dims(), &[0, 1, 0]);
        assert!(fitting_split(&v, &RepMorphism::identity(&v)).unwrap().is_none());
        let nil = RepMorphism::zero(&v, &v);
        assert!(fitting_split(&v, &nil).unwrap().is_none());
        let other = R::identity(a3());
        assert_eq!(
            fitting_split(&other, &e).unwrap_err(),
            Error::NotEndomorphism
        );
    }

    #[test]
    fn indecomposability() {
        let one = R::identity(a3());
        assert!(is_indec(&one).unwrap());
        assert!(!is_indec(&one.direct_sum(&one).unwrap()).unwrap());
        assert!(!is_indec(&one_plus_s2()).unwrap());
        assert_eq!(is_indec(&R::zero(a3())), Err(Error::ZeroRepresentation));
    }

    #[test]
    fn decomposition_reassembles() {
        let v = one_plus_s2().direct_sum(&R::identity(a3())).unwrap();
        let d = decompose(&v).unwrap();
        assert_eq!(d.dims(), vec![vec![0, 1, 0], vec![1, 1, 1], vec![1, 1, 1]]);
        assert!(d.reassembly(&v).unwrap().is_iso());
        assert!(decompose(&R::zero(a3())).unwrap().parts.is_empty());
    }

    #[test]
    fn iso_examples() {
        let v = one_plus_s2();
        assert!(iso(&v, &v).unwrap());
        let s1 = R::simple(a3(), 0);
        let s2 = R::simple(a3(), 1);
        assert!(!iso(&s1, &s2).unwrap());
        // same summands in the other order
        let w = R::simple(a3(), 1).direct_sum(&R::identity(a3())).unwrap();
        assert!(iso(&v, &w).unwrap());
        // same dims, not isomorphic: 𝟙 ⊕ S2 versus the representation with a zero first map
        let u = R::new(a3(), vec![1, 2, 1], vec![M::from_ints(2, 1, &[0, 0]), M::from_ints(1, 2, &[1, 0])]).unwrap();
        assert!(!iso(&v, &u).unwrap());
    }

    #[test]
    fn loop_with_irreducible_char_poly_is_indecomposable() {
        // x² + 1 has no rational root; End = Q[x]/(x²+1) is a field of dimension 2
        let l = Arc::new(Quiver::new(["0"], [("l", "0", "0")]).unwrap());
        let v = R::new(l, vec![2], vec![M::from_ints(2, 2, &[0, -1, 1, 0])]).unwrap();
        assert!(matches!(is_indec(&v), Err(Error::Undecided(_))));
    }

    #[test]
    fn prime_field_exhaustive() {
        let l = Arc::new(Quiver::new(["0"], [("l", "0", "0")]).unwrap());
        // x² + x + 1 is irreducible over F2: indecomposable with End = F4
        let v = Representation::new(l.clone(), vec![2], vec![Matrix::<F2>::from_ints(2, 2, &[0, 1, 1, 1])]).unwrap();
        assert!(is_indec(&v).unwrap());
        let d = Representation::new(l, vec![2], vec![Matrix::<F2>::from_ints(2, 2, &[1, 0, 0, 0])]).unwrap();
        assert!(!is_indec(&d).unwrap());
        assert_eq!(decompose(&d).unwrap_err(), Error::Characteristic);
    }
}
