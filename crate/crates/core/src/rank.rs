//! Maximal epimorphic subrepresentations, maximal monomorphic quotients, the global
//! tensor functor and the rank functions built from it.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::quiver::{QuiverMorphism, Subquiver};
use crate::rep::{RepMorphism, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubQuotKind {
    Sub,
    Quotient,
}

/// A subrepresentation with its inclusion, or a quotient with its projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubQuot<F: Field> {
    pub carrier: Representation<F>,
    pub witness: RepMorphism<F>,
    pub kind: SubQuotKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaResult<F: Field> {
    pub gamma: Representation<F>,
    pub from_delta: RepMorphism<F>,
    pub into_nabla: RepMorphism<F>,
    pub global_rank: usize,
}

/// The family of subspaces underlying the maximal epimorphic subrepresentation.
///
/// Greatest fixed point of `U_h ← U_h ∩ V_a(U_t)`, `U_t ← U_t ∩ V_a⁻¹(U_h)`, sweeping the
/// arrows in order from `U = V` until nothing changes.
pub fn max_epi_family<F: Field>(v: &Representation<F>) -> Vec<Subspace<F>> {
    let q = v.quiver();
    let mut u: Vec<Subspace<F>> = v.dims().iter().map(|&d| Subspace::full(d)).collect();
    loop {
        let mut changed = false;
        for (i, a) in q.arrows().iter().enumerate() {
            let m = v.map(i);
            let img = u[a.tail].image_under(m).expect("shapes agree");
            if !img.contains_subspace(&u[a.head]) {
                u[a.head] = u[a.head].intersect(&img).expect("shapes agree");
                changed = true;
            }
            let pre = Subspace::preimage(m, &u[a.head]).expect("shapes agree");
            if !pre.contains_subspace(&u[a.tail]) {
                u[a.tail] = u[a.tail].intersect(&pre).expect("shapes agree");
                changed = true;
            }
        }
        if !changed {
            return u;
        }
    }
}

/// `ΔV`, the unique maximal epimorphic subrepresentation.
pub fn max_epi_sub<F: Field>(v: &Representation<F>) -> SubQuot<F> {
    let family = max_epi_family(v);
    let (carrier, witness) = v.subrepresentation(&family).expect("fixed point is invariant");
    SubQuot { carrier, witness, kind: SubQuotKind::Sub }
}

/// `∇V`, the unique maximal monomorphic quotient, as the dual of `Δ` of the dual.
pub fn max_mono_quot<F: Field>(v: &Representation<F>) -> SubQuot<F> {
    let dual_sub = max_epi_sub(&v.dual());
    let carrier = Representation::new(
        v.quiver().clone(),
        dual_sub.carrier.dims().to_vec(),
        dual_sub.carrier.mats().iter().map(Matrix::transpose).collect(),
    )
    .expect("dual shapes agree");
    let comps = dual_sub.witness.comps().iter().map(Matrix::transpose).collect();
    let witness = RepMorphism::new_unchecked(v, &carrier, comps);
    SubQuot { carrier, witness, kind: SubQuotKind::Quotient }
}

/// `ΓV`, the image of `ΔV ↪ V ↠ ∇V`, with both factor maps.
pub fn global_tensor<F: Field>(v: &Representation<F>) -> Result<GammaResult<F>> {
    v.quiver().validate()?;
    let delta = max_epi_sub(v);
    let nabla = max_mono_quot(v);
    let composite: Vec<Matrix<F>> = nabla
        .witness
        .comps()
        .iter()
        .zip(delta.witness.comps())
        .map(|(p, b)| p.mul(b))
        .collect();
    let images: Vec<Subspace<F>> = composite.iter().map(Matrix::image).collect();
    let (gamma, into_nabla) = nabla.carrier.subrepresentation(&images)?;
    let comps = images
        .iter()
        .zip(&composite)
        .map(|(s, m)| s.coordinates_of(m).expect("composite lands in its image"))
        .collect();
    let from_delta = RepMorphism::new_unchecked(&delta.carrier, &gamma, comps);
    let global_rank = gamma.dim(0);
    debug_assert!(gamma.dims().iter().all(|&d| d == global_rank));
    Ok(GammaResult { gamma, from_delta, into_nabla, global_rank })
}

/// `r_Q(V)`, the common dimension of `ΓV`.
pub fn global_rank<F: Field>(v: &Representation<F>) -> Result<usize> {
    Ok(global_tensor(v)?.global_rank)
}

/// `(α_* r_{Q'})(V) = r_{Q'}(α*V)`.
pub fn pushforward_rank<F: Field>(alpha: &QuiverMorphism, v: &Representation<F>) -> Result<usize> {
    global_rank(&v.pullback(alpha)?)
}

/// `r_P(V)`: restrict to `P`, then take its global rank.
pub fn subquiver_rank<F: Field>(v: &Representation<F>, p: &Subquiver) -> Result<usize> {
    if **p.parent() != **v.quiver() {
        return Err(Error::QuiverMismatch);
    }
    global_rank(&v.restrict(p)?)
}

/// The embedding `Δv ⊗ Δw ↪ Δ(v ⊗ w)`.
pub fn theta<F: Field>(v: &Representation<F>, w: &Representation<F>) -> Result<RepMorphism<F>> {
    let (dv, dw) = (max_epi_sub(v), max_epi_sub(w));
    let kron = dv.witness.tensor(&dw.witness)?;
    let dvw = max_epi_family(&v.tensor(w)?);
    let (target, _) = v.tensor(w)?.subrepresentation(&dvw)?;
    let comps = dvw
        .iter()
        .zip(kron.comps())
        .map(|(s, m)| {
            s.coordinates_of(m)
                .ok_or_else(|| Error::Dimension("tensor of epimorphic parts escapes Δ".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    RepMorphism::new(kron.source(), &target, comps)
}

/// The surjection `∇(v ⊗ w) ↠ ∇v ⊗ ∇w`.
pub fn zeta<F: Field>(v: &Representation<F>, w: &Representation<F>) -> Result<RepMorphism<F>> {
    let (nv, nw) = (max_mono_quot(v), max_mono_quot(w));
    let kron = nv.witness.tensor(&nw.witness)?;
    let nvw = max_mono_quot(&v.tensor(w)?);
    // Z · P = p_v ⊗ p_w at every vertex.
    let comps = nvw
        .witness
        .comps()
        .iter()
        .zip(kron.comps())
        .map(|(p, k)| {
            p.transpose()
                .solve(&k.transpose())
                .map(|z| z.transpose())
                .ok_or_else(|| Error::Dimension("tensor of quotients does not factor through ∇".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    RepMorphism::new(&nvw.carrier, kron.target(), comps)
}

/// `D(∇V)` and `Δ_{Q^op}(DV)` agree exactly, carrier and witness.
pub fn duality_holds<F: Field>(v: &Representation<F>) -> bool {
    let nabla = max_mono_quot(v);
    let lhs = nabla.carrier.dual();
    let rhs = max_epi_sub(&v.dual());
    lhs == rhs.carrier && nabla.witness.dual().comps() == rhs.witness.comps()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::field::{Rational, F2};
    use crate::quiver::Quiver;

    type M = Matrix<Rational>;
    type R = Representation<Rational>;

    fn qa() -> Arc<Quiver> {
        Arc::new(
            Quiver::new(["1", "2", "3", "4"], [("a", "1", "3"), ("b", "2", "3"), ("c", "3", "4")]).unwrap(),
        )
    }

    fn w() -> R {
        R::new(
            qa(),
            vec![1, 1, 2, 1],
            vec![M::from_ints(2, 1, &[1, 0]), M::from_ints(2, 1, &[0, 1]), M::from_ints(1, 2, &[1, 1])],
        )
        .unwrap()
    }

    fn k4() -> R {
        let q = Arc::new(
            Quiver::new(["x", "y"], [("a", "x", "y"), ("b", "x", "y"), ("c", "x", "y"), ("d", "x", "y")])
                .unwrap(),
        );
        R::new(
            q,
            vec![2, 3],
            vec![
                M::from_ints(3, 2, &[1, 1, 0, 0, 0, 0]),
                M::from_ints(3, 2, &[1, 0, 0, 1, 0, 0]),
                M::from_ints(3, 2, &[1, 0, 0, 0, 0, 1]),
                M::from_ints(3, 2, &[1, 1, 0, 1, 0, 1]),
            ],
        )
        .unwrap()
    }

    fn loop_rep(m: M) -> R {
        let l = Arc::new(Quiver::new(["0"], [("l", "0", "0")]).unwrap());
        R::new(l, vec![m.rows()], vec![m]).unwrap()
    }

    #[test]
    fn w_has_no_epimorphic_part() {
        assert!(max_epi_sub(&w()).carrier.is_zero());
        let n = max_mono_quot(&w());
        assert_eq!(n.carrier.dims(), &[1, 1, 1, 1]);
        assert!(n.carrier.is_monomorphic());
        assert!(n.witness.validate().is_ok());
        assert_eq!(global_rank(&w()).unwrap(), 0);
    }

    #[test]
    fn k4_example() {
        let d = max_epi_sub(&k4());
        assert_eq!(d.carrier.dims(), &[1, 1]);
        assert_eq!(d.witness.comp(0), &M::from_ints(2, 1, &[1, 0]));
        assert_eq!(d.witness.comp(1), &M::from_ints(3, 1, &[1, 0, 0]));
        // The printed first matrix has rank 1, so V is not monomorphic and the
        // kernel closure of (1,-1) at x fills everything.
        assert!(!k4().is_monomorphic());
        assert!(max_mono_quot(&k4()).carrier.is_zero());
        assert_eq!(global_rank(&k4()).unwrap(), 0);
    }

    #[test]
    fn loop_dichotomy() {
        let inv = loop_rep(M::from_ints(2, 2, &[1, 1, 0, 1]));
        assert_eq!(max_epi_sub(&inv).carrier, inv);
        let nil = loop_rep(M::from_ints(3, 3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]));
        assert!(max_epi_sub(&nil).carrier.is_zero());
        // mixed: invertible block plus nilpotent block keeps only the invertible part
        let mixed = loop_rep(M::from_ints(2, 2, &[2, 0, 0, 0]));
        assert_eq!(max_epi_sub(&mixed).carrier.dims(), &[1]);
    }

    #[test]
    fn identity_is_fixed() {
        let one = R::identity(qa());
        assert_eq!(max_epi_sub(&one).carrier, one);
        assert_eq!(max_mono_quot(&one).carrier, one);
        assert_eq!(global_rank(&one).unwrap(), 1);
    }

    #[test]
    fn duality_on_examples() {
        assert!(duality_holds(&w()));
        assert!(duality_holds(&k4()));
        assert!(duality_holds(&loop_rep(M::from_ints(2, 2, &[0, 1, 0, 0]))));
    }

    #[test]
    fn theta_is_not_onto_on_k2() {
        let k2 = Arc::new(Quiver::new(["x", "y"], [("p", "x", "y"), ("q", "x", "y")]).unwrap());
        let v = R::new(k2.clone(), vec![1, 1], vec![M::from_ints(1, 1, &[1]), M::from_ints(1, 1, &[0])]).unwrap();
        let wv = R::new(k2, vec![1, 1], vec![M::from_ints(1, 1, &[0]), M::from_ints(1, 1, &[1])]).unwrap();
        let t = theta(&v, &wv).unwrap();
        assert!(t.source().is_zero());
        assert_eq!(t.target().dims(), &[1, 0]);
        let z = zeta(&v, &wv).unwrap();
        assert!(z.comps().iter().all(|c| c.rank() == c.rows()));
    }

    #[test]
    fn prime_field_delta() {
        let l = Arc::new(Quiver::new(["0"], [("l", "0", "0")]).unwrap());
        // [[1,1],[1,1]] over F2 squares to zero.
        let m = Matrix::<F2>::from_ints(2, 2, &[1, 1, 1, 1]);
        let v = Representation::new(l, vec![2], vec![m]).unwrap();
        assert!(max_epi_sub(&v).carrier.is_zero());
    }

    #[test]
    fn disconnected_rank_is_an_error() {
        let q = Arc::new(Quiver::new(["x", "y"], Vec::<(&str, &str, &str)>::new()).unwrap());
        assert_eq!(global_rank(&R::identity(q)), Err(Error::Disconnected));
    }
}
