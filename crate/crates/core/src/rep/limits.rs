use crate::error::Result;
use crate::field::Field;
use crate::linalg::Matrix;
use crate::rep::Representation;

/// Limit and colimit of a representation viewed as a diagram over the path category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitData<F: Field> {
    pub lim_dim: usize,
    /// `α_x : lim → V_x`
    pub alpha: Vec<Matrix<F>>,
    pub colim_dim: usize,
    /// `β_x : V_x → colim`
    pub beta: Vec<Matrix<F>>,
    /// `β_x · α_x`, the same for every vertex.
    pub eta: Matrix<F>,
}

/// Limit as the kernel of `(v_x) ↦ (V_a v_{ta} − v_{ha})_a`, colimit as the cokernel of
/// `⊕_a V_{ta} → ⊕_x V_x`. Requires a connected quiver, so that `η` is well defined.
pub fn limit<F: Field>(v: &Representation<F>) -> Result<LimitData<F>> {
    let q = v.quiver();
    q.validate()?;
    let n = q.num_vertices();
    let mut voff = vec![0];
    for x in 0..n {
        voff.push(voff[x] + v.dim(x));
    }
    let total = voff[n];
    let mut aoff = vec![0];
    for (i, a) in q.arrows().iter().enumerate() {
        aoff.push(aoff[i] + v.dim(a.head));
    }
    let mut tail_off = vec![0];
    for (i, a) in q.arrows().iter().enumerate() {
        tail_off.push(tail_off[i] + v.dim(a.tail));
    }

    // Compatibility map ∏ V_x → ∏_a V_{ha}.
    let mut compat = Matrix::zeros(aoff[q.num_arrows()], total);
    // Relation map ⊕_a V_{ta} → ⊕ V_x.
    let mut rel = Matrix::zeros(total, tail_off[q.num_arrows()]);
    for (i, a) in q.arrows().iter().enumerate() {
        let m = v.map(i);
        let neg_id_h = Matrix::scalar(v.dim(a.head), -F::one());
        let neg_id_t = Matrix::scalar(v.dim(a.tail), -F::one());
        add_block(&mut compat, aoff[i], voff[a.tail], m);
        add_block(&mut compat, aoff[i], voff[a.head], &neg_id_h);
        add_block(&mut rel, voff[a.tail], tail_off[i], &neg_id_t);
        add_block(&mut rel, voff[a.head], tail_off[i], m);
    }

    let lim = compat.kernel();
    let lim_basis = lim.basis();
    let alpha: Vec<Matrix<F>> = (0..n).map(|x| lim_basis.row_block(voff[x], voff[x + 1])).collect();

    let proj = rel.image().annihilator();
    let beta: Vec<Matrix<F>> = (0..n).map(|x| proj.col_block(voff[x], voff[x + 1])).collect();
    let eta = beta[0].mul(&alpha[0]);
    debug_assert!((1..n).all(|x| beta[x].mul(&alpha[x]) == eta), "eta depends on the vertex");
    Ok(LimitData { lim_dim: lim.dim(), alpha, colim_dim: proj.rows(), beta, eta })
}

/// `m[r.., c..] += block`; loops put two blocks on the same spot.
fn add_block<F: Field>(m: &mut Matrix<F>, r: usize, c: usize, block: &Matrix<F>) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let b = &block[(i, j)];
            if !b.is_zero() {
                let e = &mut m[(r + i, c + j)];
                *e = e.clone() + b.clone();
            }
        }
    }
}
