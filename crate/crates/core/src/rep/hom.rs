use std::sync::Arc;

use crate::error::Result;
use crate::field::Field;
use crate::linalg::Matrix;
use crate::rep::{RepMorphism, Representation};

/// Basis of `Hom(v, w)`.
///
/// Unknowns are the entries of every `φ_x`, vertex-major and column-major within a
/// vertex; the basis is the canonical kernel basis of the intertwining system.
pub fn hom_space<F: Field>(v: &Representation<F>, w: &Representation<F>) -> Result<Vec<RepMorphism<F>>> {
    v.same_quiver(w)?;
    let q = v.quiver();
    let n = q.num_vertices();
    let mut offset = Vec::with_capacity(n + 1);
    offset.push(0);
    for x in 0..n {
        offset.push(offset[x] + w.dim(x) * v.dim(x));
    }
    let unknowns = offset[n];
    // index of φ_x[i, j]
    let var = |x: usize, i: usize, j: usize| offset[x] + j * w.dim(x) + i;

    let rows: usize = q.arrows().iter().map(|a| w.dim(a.head) * v.dim(a.tail)).sum();
    let mut sys = Matrix::zeros(rows, unknowns);
    let mut r = 0;
    for (ai, a) in q.arrows().iter().enumerate() {
        let (va, wa) = (v.map(ai), w.map(ai));
        let (h, t) = (a.head, a.tail);
        // (φ_h V_a − W_a φ_t)[i, j] = 0
        for j in 0..v.dim(t) {
            for i in 0..w.dim(h) {
                for k in 0..v.dim(h) {
                    let c = &va[(k, j)];
                    if !c.is_zero() {
                        let e: &mut F = &mut sys[(r, var(h, i, k))];
                        *e = e.clone() + c.clone();
                    }
                }
                for l in 0..w.dim(t) {
                    let c = &wa[(i, l)];
                    if !c.is_zero() {
                        let e: &mut F = &mut sys[(r, var(t, l, j))];
                        *e = e.clone() - c.clone();
                    }
                }
                r += 1;
            }
        }
    }
    let kernel = sys.kernel();
    let (src, tgt) = (Arc::new(v.clone()), Arc::new(w.clone()));
    let basis = kernel.basis();
    let mut out = Vec::with_capacity(basis.cols());
    for b in 0..basis.cols() {
        let comps = (0..n)
            .map(|x| {
                let mut m = Matrix::zeros(w.dim(x), v.dim(x));
                for j in 0..v.dim(x) {
                    for i in 0..w.dim(x) {
                        m[(i, j)] = basis[(var(x, i, j), b)].clone();
                    }
                }
                m
            })
            .collect();
        out.push(RepMorphism::from_arcs_unchecked(src.clone(), tgt.clone(), comps));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
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

    fn v3() -> R {
        let q = Arc::new(
            Quiver::new(["c", "1", "2", "3"], [("a1", "1", "c"), ("a2", "2", "c"), ("a3", "3", "c")]).unwrap(),
        );
        R::new(
            q,
            vec![2, 1, 1, 1],
            vec![M::from_ints(2, 1, &[1, 0]), M::from_ints(2, 1, &[0, 1]), M::from_ints(2, 1, &[1, 1])],
        )
        .unwrap()
    }

    #[test]
    fn hom_dimensions() {
        let one = R::identity(qa());
        assert_eq!(hom_space(&one, &one).unwrap().len(), 1);
        // 𝟙 → W: φ_3 must be a multiple of both e1 and e2 → 0.
        assert_eq!(hom_space(&one, &w()).unwrap().len(), 0);
        // W → 𝟙: φ_3 = λ(1, 1), forced by C.
        assert_eq!(hom_space(&w(), &one).unwrap().len(), 1);
        assert_eq!(hom_space(&v3(), &v3()).unwrap().len(), 1);
        let oo = one.direct_sum(&one).unwrap();
        assert_eq!(hom_space(&oo, &oo).unwrap().len(), 4);
    }

    #[test]
    fn hom_basis_elements_intertwine() {
        let ww = w().tensor(&w()).unwrap();
        for f in hom_space(&ww, &ww).unwrap() {
            assert!(f.validate().is_ok());
        }
    }

    #[test]
    fn loops_accumulate() {
        let l = Arc::new(Quiver::new(["0"], [("l", "0", "0")]).unwrap());
        let jordan = R::new(l.clone(), vec![2], vec![M::from_ints(2, 2, &[0, 1, 0, 0])]).unwrap();
        // centralizer of a 2x2 Jordan block: polynomials in it, dimension 2
        assert_eq!(hom_space(&jordan, &jordan).unwrap().len(), 2);
        let id2 = R::new(l, vec![2], vec![M::identity(2)]).unwrap();
        assert_eq!(hom_space(&id2, &id2).unwrap().len(), 4);
    }
}
