//! Seeded random representations for property suites and benchmarks.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::Field;
use crate::linalg::Matrix;
use crate::quiver::Quiver;
use crate::rep::Representation;

/// Shape of generated representations.
#[derive(Clone, Copy, Debug)]
pub struct CorpusParams {
    /// Per-vertex dimensions are drawn from `0..=max_dim`.
    pub max_dim: usize,
    /// Resample until the total dimension is at most this.
    pub max_total: usize,
    /// Entries are drawn from `-entry..=entry`, about half of them zero.
    pub entry: i64,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams { max_dim: 2, max_total: 10, entry: 2 }
    }
}

/// Random matrix with sparse small-integer entries; sometimes forced to low rank.
pub fn random_matrix<F: Field>(rng: &mut impl Rng, rows: usize, cols: usize, entry: i64) -> Matrix<F> {
    let draw = |rng: &mut dyn rand::RngCore, r: usize, c: usize| {
        let data = (0..r * c)
            .map(|_| if rng.gen_bool(0.5) { F::zero() } else { F::from_i64(rng.gen_range(-entry..=entry)) })
            .collect();
        Matrix::new(r, c, data).expect("sized")
    };
    if rows > 1 && cols > 1 && rng.gen_ratio(1, 4) {
        // rank at most 1
        let u = draw(rng, rows, 1);
        let v = draw(rng, 1, cols);
        return u.mul(&v);
    }
    draw(rng, rows, cols)
}

pub fn random_rep<F: Field>(q: &Arc<Quiver>, rng: &mut impl Rng, p: CorpusParams) -> Representation<F> {
    let dims = loop {
        let d: Vec<usize> = (0..q.num_vertices()).map(|_| rng.gen_range(0..=p.max_dim)).collect();
        if d.iter().sum::<usize>() <= p.max_total {
            break d;
        }
    };
    let mats = q
        .arrows()
        .iter()
        .map(|a| random_matrix(rng, dims[a.head], dims[a.tail], p.entry))
        .collect();
    Representation::new(q.clone(), dims, mats).expect("sized")
}

/// `count` representations from a fixed seed.
pub fn corpus<F: Field>(q: &Arc<Quiver>, seed: u64, count: usize, p: CorpusParams) -> Vec<Representation<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_rep(q, &mut rng, p)).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
