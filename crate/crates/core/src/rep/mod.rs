//! Finite-dimensional representations of a quiver and their morphisms.

mod hom;
mod limits;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{binomial, Matrix, Subspace};
use crate::quiver::{Path, Quiver, QuiverMorphism, Subquiver};

pub use hom::hom_space;
pub use limits::{limit, LimitData};

/// A vector space per vertex (given by its dimension) and a matrix per arrow.
///
/// The matrix of arrow `a` has `dims[head a]` rows and `dims[tail a]` columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Representation<F> {
    quiver: Arc<Quiver>,
    dims: Vec<usize>,
    mats: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    pub fn new(quiver: Arc<Quiver>, dims: Vec<usize>, mats: Vec<Matrix<F>>) -> Result<Self> {
        if dims.len() != quiver.num_vertices() {
            return Err(Error::Dimension(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.num_vertices()
            )));
        }
        if mats.len() != quiver.num_arrows() {
            return Err(Error::Dimension(format!(
                "{} matrices for {} arrows",
                mats.len(),
                quiver.num_arrows()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(&mats) {
            let want = (dims[a.head], dims[a.tail]);
            if m.shape() != want {
                return Err(Error::Dimension(format!(
                    "arrow `{}` needs a {}x{} matrix, got {}x{}",
                    a.name,
                    want.0,
                    want.1,
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation { quiver, dims, mats })
    }

    pub fn zero(quiver: Arc<Quiver>) -> Self {
        let dims = vec![0; quiver.num_vertices()];
        let mats = vec![Matrix::zeros(0, 0); quiver.num_arrows()];
        Representation { quiver, dims, mats }
    }

    /// The tensor unit: `K` everywhere, identity on every arrow.
    pub fn identity(quiver: Arc<Quiver>) -> Self {
        let dims = vec![1; quiver.num_vertices()];
        let mats = vec![Matrix::identity(1); quiver.num_arrows()];
        Representation { quiver, dims, mats }
    }

    /// One-dimensional at `vertex`, zero elsewhere. Loops at `vertex` act by zero.
    pub fn simple(quiver: Arc<Quiver>, vertex: usize) -> Self {
        let mut dims = vec![0; quiver.num_vertices()];
        dims[vertex] = 1;
        Self::with_zero_maps(quiver, dims)
    }

    /// Given dimensions, every arrow acting by zero.
    pub fn with_zero_maps(quiver: Arc<Quiver>, dims: Vec<usize>) -> Self {
        let mats = quiver.arrows().iter().map(|a| Matrix::zeros(dims[a.head], dims[a.tail])).collect();
        Representation { quiver, dims, mats }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, vertex: usize) -> usize {
        self.dims[vertex]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn mats(&self) -> &[Matrix<F>] {
        &self.mats
    }

    pub fn map(&self, arrow: usize) -> &Matrix<F> {
        &self.mats[arrow]
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Vertices with nonzero space.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&x| self.dims[x] > 0).collect()
    }

    /// Every arrow map surjective.
    pub fn is_epimorphic(&self) -> bool {
        self.mats.iter().all(|m| m.rank() == m.rows())
    }

    /// Every arrow map injective.
    pub fn is_monomorphic(&self) -> bool {
        self.mats.iter().all(|m| m.rank() == m.cols())
    }

    fn same_quiver(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.quiver, &other.quiver) || self.quiver == other.quiver {
            Ok(())
        } else {
            Err(Error::QuiverMismatch)
        }
    }

    /// `self ⊕ other`, left block first.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.same_quiver(other)?;
        Ok(Representation {
            quiver: self.quiver.clone(),
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            mats: self.mats.iter().zip(&other.mats).map(|(a, b)| a.block_diag(b)).collect(),
        })
    }

    /// Direct sum of all `parts` in order; the zero representation when empty.
    pub fn direct_sum_all(quiver: Arc<Quiver>, parts: &[Self]) -> Result<Self> {
        parts.iter().try_fold(Self::zero(quiver), |acc, p| acc.direct_sum(p))
    }

    /// `self ⊕ other` with its insertions and projections.
    pub fn biproduct(&self, other: &Self) -> Result<Biproduct<F>> {
        let sum = self.direct_sum(other)?;
        let n = self.dims.len();
        let mut comps = [Vec::with_capacity(n), Vec::with_capacity(n)];
        let mut proj = [Vec::with_capacity(n), Vec::with_capacity(n)];
        for x in 0..n {
            let (p, q) = (self.dims[x], other.dims[x]);
            let mut i1 = Matrix::zeros(p + q, p);
            i1.set_block(0, 0, &Matrix::identity(p));
            let mut i2 = Matrix::zeros(p + q, q);
            i2.set_block(p, 0, &Matrix::identity(q));
            proj[0].push(i1.transpose());
            proj[1].push(i2.transpose());
            comps[0].push(i1);
            comps[1].push(i2);
        }
        let [c0, c1] = comps;
        let [p0, p1] = proj;
        Ok(Biproduct {
            inclusions: [
                RepMorphism::new_unchecked(self, &sum, c0),
                RepMorphism::new_unchecked(other, &sum, c1),
            ],
            projections: [
                RepMorphism::new_unchecked(&sum, self, p0),
                RepMorphism::new_unchecked(&sum, other, p1),
            ],
            sum,
        })
    }

    /// Pointwise tensor product, left-major Kronecker order.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.same_quiver(other)?;
        Ok(Representation {
            quiver: self.quiver.clone(),
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a * b).collect(),
            mats: self.mats.iter().zip(&other.mats).map(|(a, b)| a.kronecker(b)).collect(),
        })
    }

    /// Dual representation over the opposite quiver: transposed maps on reversed arrows.
    pub fn dual(&self) -> Self {
        Representation {
            quiver: Arc::new(self.quiver.opposite()),
            dims: self.dims.clone(),
            mats: self.mats.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Composite map along a path; identity for a trivial path.
    pub fn path_map(&self, p: &Path) -> Result<Matrix<F>> {
        let n = self.quiver.num_vertices();
        if p.start() >= n || p.end() >= n || p.arrows().iter().any(|&a| a >= self.quiver.num_arrows()) {
            return Err(Error::QuiverMismatch);
        }
        let mut m = Matrix::identity(self.dims[p.start()]);
        for &a in p.arrows() {
            m = self.mats[a].checked_mul(&m)?;
        }
        Ok(m)
    }

    /// `α*V` for `V` over `α.target`.
    pub fn pullback(&self, alpha: &QuiverMorphism) -> Result<Self> {
        if **alpha.target() != *self.quiver {
            return Err(Error::QuiverMismatch);
        }
        Ok(Representation {
            quiver: alpha.source().clone(),
            dims: alpha.vertex_map().iter().map(|&x| self.dims[x]).collect(),
            mats: alpha.arrow_map().iter().map(|&a| self.mats[a].clone()).collect(),
        })
    }

    pub fn restrict(&self, sub: &Subquiver) -> Result<Self> {
        self.pullback(sub.inclusion())
    }

    /// Pointwise `Λ^k`.
    pub fn exterior(&self, k: usize) -> Self {
        Representation {
            quiver: self.quiver.clone(),
            dims: self.dims.iter().map(|&d| binomial(d, k)).collect(),
            mats: self.mats.iter().map(|m| m.exterior_power(k)).collect(),
        }
    }

    /// Pointwise `S^k`.
    pub fn symmetric(&self, k: usize) -> Self {
        Representation {
            quiver: self.quiver.clone(),
            dims: self.dims.iter().map(|&d| symmetric_dim(d, k)).collect(),
            mats: self.mats.iter().map(|m| m.symmetric_power(k)).collect(),
        }
    }

    /// Subrepresentation on an invariant family of subspaces, with its inclusion.
    ///
    /// Carrier bases are the canonical bases of `family`.
    pub fn subrepresentation(&self, family: &[Subspace<F>]) -> Result<(Self, RepMorphism<F>)> {
        self.check_family(family)?;
        let mut mats = Vec::with_capacity(self.mats.len());
        for (a, m) in self.quiver.arrows().iter().zip(&self.mats) {
            let image = m.mul(family[a.tail].basis());
            let induced = family[a.head].coordinates_of(&image).ok_or_else(|| {
                Error::Dimension(format!("subspace family is not invariant under arrow `{}`", a.name))
            })?;
            mats.push(induced);
        }
        let carrier = Representation {
            quiver: self.quiver.clone(),
            dims: family.iter().map(Subspace::dim).collect(),
            mats,
        };
        let comps = family.iter().map(|s| s.basis().clone()).collect();
        let incl = RepMorphism::new_unchecked(&carrier, self, comps);
        Ok((carrier, incl))
    }

    /// Quotient by an invariant family of subspaces, with its projection.
    ///
    /// The projection at `x` is the canonical annihilator of `family[x]`.
    pub fn quotient(&self, family: &[Subspace<F>]) -> Result<(Self, RepMorphism<F>)> {
        self.check_family(family)?;
        let projs: Vec<Matrix<F>> = family.iter().map(Subspace::annihilator).collect();
        let mut mats = Vec::with_capacity(self.mats.len());
        for (a, m) in self.quiver.arrows().iter().zip(&self.mats) {
            // M · P_t = P_h · V_a
            let rhs = projs[a.head].mul(m);
            let induced = projs[a.tail].transpose().solve(&rhs.transpose()).ok_or_else(|| {
                Error::Dimension(format!("subspace family is not invariant under arrow `{}`", a.name))
            })?;
            mats.push(induced.transpose());
        }
        let carrier = Representation {
            quiver: self.quiver.clone(),
            dims: projs.iter().map(Matrix::rows).collect(),
            mats,
        };
        let proj = RepMorphism::new_unchecked(self, &carrier, projs);
        Ok((carrier, proj))
    }

    fn check_family(&self, family: &[Subspace<F>]) -> Result<()> {
        if family.len() != self.dims.len()
            || family.iter().zip(&self.dims).any(|(s, &d)| s.ambient_dim() != d)
        {
            return Err(Error::Dimension("subspace family does not match the representation".into()));
        }
        Ok(())
    }
}

fn symmetric_dim(d: usize, k: usize) -> usize {
    match (d, k) {
        (_, 0) => 1,
        (0, _) => 0,
        _ => binomial(d + k - 1, k),
    }
}

impl<F: Field> fmt::Debug for Representation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation {{ dims: {:?}", self.dims)?;
        for (a, m) in self.quiver.arrows().iter().zip(&self.mats) {
            write!(f, ", {}: {}", a.name, m)?;
        }
        write!(f, " }}")
    }
}

/// A direct sum together with its structure maps; index 0 is the left summand.
#[derive(Clone, Debug)]
pub struct Biproduct<F: Field> {
    pub sum: Representation<F>,
    pub inclusions: [RepMorphism<F>; 2],
    pub projections: [RepMorphism<F>; 2],
}

/// Per-vertex matrices commuting with the arrow maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RepMorphism<F> {
    source: Arc<Representation<F>>,
    target: Arc<Representation<F>>,
    comps: Vec<Matrix<F>>,
}

impl<F: Field> RepMorphism<F> {
    /// Checks shapes and `φ_h · V_a = W_a · φ_t` on every arrow.
    pub fn new(source: &Representation<F>, target: &Representation<F>, comps: Vec<Matrix<F>>) -> Result<Self> {
        Self::from_arcs(Arc::new(source.clone()), Arc::new(target.clone()), comps)
    }

    pub fn from_arcs(
        source: Arc<Representation<F>>,
        target: Arc<Representation<F>>,
        comps: Vec<Matrix<F>>,
    ) -> Result<Self> {
        source.same_quiver(&target)?;
        if comps.len() != source.dims.len() {
            return Err(Error::Dimension(format!(
                "{} components for {} vertices",
                comps.len(),
                source.dims.len()
            )));
        }
        for (x, c) in comps.iter().enumerate() {
            if c.shape() != (target.dims[x], source.dims[x]) {
                return Err(Error::Dimension(format!(
                    "component at `{}` must be {}x{}",
                    source.quiver.vertex_name(x),
                    target.dims[x],
                    source.dims[x]
                )));
            }
        }
        for (i, a) in source.quiver.arrows().iter().enumerate() {
            if comps[a.head].mul(&source.mats[i]) != target.mats[i].mul(&comps[a.tail]) {
                return Err(Error::NotIntertwining { arrow: a.name.clone() });
            }
        }
        Ok(RepMorphism { source, target, comps })
    }

    /// For components already known to intertwine.
    pub(crate) fn new_unchecked(source: &Representation<F>, target: &Representation<F>, comps: Vec<Matrix<F>>) -> Self {
        let m = RepMorphism { source: Arc::new(source.clone()), target: Arc::new(target.clone()), comps };
        debug_assert!(m.validate().is_ok(), "internal morphism fails to intertwine");
        m
    }

    pub(crate) fn from_arcs_unchecked(
        source: Arc<Representation<F>>,
        target: Arc<Representation<F>>,
        comps: Vec<Matrix<F>>,
    ) -> Self {
        let m = RepMorphism { source, target, comps };
        debug_assert!(m.validate().is_ok(), "internal morphism fails to intertwine");
        m
    }

    pub fn validate(&self) -> Result<()> {
        Self::from_arcs(self.source.clone(), self.target.clone(), self.comps.clone()).map(|_| ())
    }

    pub fn identity(v: &Representation<F>) -> Self {
        let v = Arc::new(v.clone());
        let comps = v.dims.iter().map(|&d| Matrix::identity(d)).collect();
        RepMorphism { source: v.clone(), target: v, comps }
    }

    pub fn zero(source: &Representation<F>, target: &Representation<F>) -> Self {
        let comps = source.dims.iter().zip(&target.dims).map(|(&s, &t)| Matrix::zeros(t, s)).collect();
        RepMorphism { source: Arc::new(source.clone()), target: Arc::new(target.clone()), comps }
    }

    pub fn source(&self) -> &Representation<F> {
        &self.source
    }

    pub fn target(&self) -> &Representation<F> {
        &self.target
    }

    pub fn comps(&self) -> &[Matrix<F>] {
        &self.comps
    }

    pub fn comp(&self, vertex: usize) -> &Matrix<F> {
        &self.comps[vertex]
    }

    pub fn is_endomorphism(&self) -> bool {
        Arc::ptr_eq(&self.source, &self.target) || self.source == self.target
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    /// Invertible at every vertex.
    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(Matrix::is_invertible)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &RepMorphism<F>) -> Result<RepMorphism<F>> {
        if !(Arc::ptr_eq(&first.target, &self.source) || first.target == self.source) {
            return Err(Error::Dimension("morphisms are not composable".into()));
        }
        let comps = self.comps.iter().zip(&first.comps).map(|(g, f)| g.mul(f)).collect();
        Ok(RepMorphism { source: first.source.clone(), target: self.target.clone(), comps })
    }

    fn check_parallel(&self, other: &RepMorphism<F>) -> Result<()> {
        let same = |a: &Arc<Representation<F>>, b: &Arc<Representation<F>>| Arc::ptr_eq(a, b) || a == b;
        if same(&self.source, &other.source) && same(&self.target, &other.target) {
            Ok(())
        } else {
            Err(Error::Dimension("morphisms have different sources or targets".into()))
        }
    }

    pub fn add(&self, other: &RepMorphism<F>) -> Result<RepMorphism<F>> {
        self.check_parallel(other)?;
        Ok(self.with_comps(self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect()))
    }

    pub fn sub(&self, other: &RepMorphism<F>) -> Result<RepMorphism<F>> {
        self.check_parallel(other)?;
        Ok(self.with_comps(self.comps.iter().zip(&other.comps).map(|(a, b)| a.sub(b)).collect()))
    }

    pub fn scale(&self, c: &F) -> RepMorphism<F> {
        self.with_comps(self.comps.iter().map(|m| m.scale(c)).collect())
    }

    /// `self − λ·id`; requires an endomorphism.
    pub fn shift(&self, lambda: &F) -> Result<RepMorphism<F>> {
        if !self.is_endomorphism() {
            return Err(Error::NotEndomorphism);
        }
        Ok(self.with_comps(
            self.comps.iter().map(|m| m.sub(&Matrix::scalar(m.rows(), lambda.clone()))).collect(),
        ))
    }

    /// Linear combination `Σ c_i f_i` of parallel morphisms.
    pub fn combination(basis: &[RepMorphism<F>], coeffs: &[F]) -> Result<RepMorphism<F>> {
        let first = basis.first().ok_or_else(|| Error::Dimension("empty combination".into()))?;
        let mut acc = RepMorphism::zero_like(first);
        for (f, c) in basis.iter().zip(coeffs) {
            if !c.is_zero() {
                acc = acc.add(&f.scale(c))?;
            }
        }
        Ok(acc)
    }

    fn zero_like(f: &RepMorphism<F>) -> RepMorphism<F> {
        f.with_comps(f.comps.iter().map(|m| Matrix::zeros(m.rows(), m.cols())).collect())
    }

    fn with_comps(&self, comps: Vec<Matrix<F>>) -> RepMorphism<F> {
        RepMorphism { source: self.source.clone(), target: self.target.clone(), comps }
    }

    /// Pointwise Kronecker product `f ⊗ g : V ⊗ V′ → W ⊗ W′`.
    pub fn tensor(&self, other: &RepMorphism<F>) -> Result<RepMorphism<F>> {
        let source = self.source.tensor(&other.source)?;
        let target = self.target.tensor(&other.target)?;
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.kronecker(b)).collect();
        Ok(RepMorphism::new_unchecked(&source, &target, comps))
    }

    /// Transposed components, as a morphism of duals in the other direction.
    pub fn dual(&self) -> RepMorphism<F> {
        RepMorphism {
            source: Arc::new(self.target.dual()),
            target: Arc::new(self.source.dual()),
            comps: self.comps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Per-vertex kernels, an invariant family of the source.
    pub fn kernel_family(&self) -> Vec<Subspace<F>> {
        self.comps.iter().map(Matrix::kernel).collect()
    }

    /// Per-vertex images, an invariant family of the target.
    pub fn image_family(&self) -> Vec<Subspace<F>> {
        self.comps.iter().map(Matrix::image).collect()
    }
}

impl<F: Field> fmt::Debug for RepMorphism<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepMorphism {{ {:?} -> {:?}, comps: [", self.source.dims, self.target.dims)?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] }}")
    }
}
