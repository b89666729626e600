//! Isomorphism classes of indecomposables and arithmetic in the representation ring.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, RwLock};

use crate::decompose::{decompose, is_indec, iso};
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::quiver::{Quiver, QuiverMorphism, Subquiver};
use crate::rank::{global_rank, pushforward_rank, subquiver_rank};
use crate::rep::Representation;

type R = Representation<Rational>;

/// Index of a class in its registry, in insertion order.
pub type ClassId = usize;

/// Dimension vector, then the subquiver ranks in subquiver order.
pub type Fingerprint = (Vec<usize>, Vec<usize>);

#[derive(Clone, Debug)]
pub struct IndecClass {
    pub id: ClassId,
    pub representative: R,
    pub fingerprint: Fingerprint,
}

/// Registry of indecomposable classes over one quiver.
///
/// Reads run concurrently; inserts are serialized behind the write lock.
#[derive(Debug)]
pub struct ClassRegistry {
    quiver: Arc<Quiver>,
    subquivers: Vec<Subquiver>,
    classes: RwLock<Vec<IndecClass>>,
    products: Mutex<HashMap<(ClassId, ClassId), RingElement>>,
}

impl ClassRegistry {
    pub fn new(quiver: Arc<Quiver>) -> Result<Self> {
        quiver.validate()?;
        let subquivers = quiver.connected_subquivers();
        Ok(ClassRegistry {
            quiver,
            subquivers,
            classes: RwLock::new(Vec::new()),
            products: Mutex::new(HashMap::new()),
        })
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn subquivers(&self) -> &[Subquiver] {
        &self.subquivers
    }

    pub fn len(&self) -> usize {
        self.classes.read().expect("registry lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn class(&self, id: ClassId) -> IndecClass {
        self.classes.read().expect("registry lock")[id].clone()
    }

    pub fn fingerprint(&self, v: &R) -> Result<Fingerprint> {
        let ranks = self.subquivers.iter().map(|p| subquiver_rank(v, p)).collect::<Result<_>>()?;
        Ok((v.dims().to_vec(), ranks))
    }

    /// Class ids ordered by dimension vector, then fingerprint, then insertion.
    pub fn display_order(&self) -> Vec<ClassId> {
        let classes = self.classes.read().expect("registry lock");
        let mut ids: Vec<ClassId> = (0..classes.len()).collect();
        ids.sort_by(|&a, &b| classes[a].fingerprint.cmp(&classes[b].fingerprint).then(a.cmp(&b)));
        ids
    }

    fn find(&self, classes: &[IndecClass], v: &R, fp: &Fingerprint) -> Result<Option<ClassId>> {
        for c in classes.iter().filter(|c| &c.fingerprint == fp) {
            if iso(&c.representative, v)? {
                return Ok(Some(c.id));
            }
        }
        Ok(None)
    }

    /// Class of an indecomposable, inserting it when new.
    pub fn classify(&self, v: &R) -> Result<ClassId> {
        if **v.quiver() != *self.quiver {
            return Err(Error::QuiverMismatch);
        }
        if !is_indec(v)? {
            return Err(Error::Dimension("only indecomposables have a class".into()));
        }
        self.classify_indec(v)
    }

    fn classify_indec(&self, v: &R) -> Result<ClassId> {
        let fp = self.fingerprint(v)?;
        let seen = {
            let classes = self.classes.read().expect("registry lock");
            if let Some(id) = self.find(&classes, v, &fp)? {
                return Ok(id);
            }
            classes.len()
        };
        let mut classes = self.classes.write().expect("registry lock");
        if let Some(id) = self.find(&classes[seen..], v, &fp)? {
            return Ok(id);
        }
        let id = classes.len();
        classes.push(IndecClass { id, representative: v.clone(), fingerprint: fp });
        Ok(id)
    }

    /// Multiset of classes of the Krull–Schmidt summands.
    pub fn decompose_classes(&self, v: &R) -> Result<Vec<ClassId>> {
        let d = decompose(v)?;
        let mut ids = d.parts.iter().map(|p| self.classify_indec(p)).collect::<Result<Vec<_>>>()?;
        ids.sort_unstable();
        Ok(ids)
    }

    /// `[V]` as a sum of indecomposable classes.
    pub fn ring_from(&self, v: &R) -> Result<RingElement> {
        let mut x = RingElement::zero(self.quiver.clone());
        for id in self.decompose_classes(v)? {
            x.add_term(id, 1);
        }
        Ok(x)
    }

    pub fn one(&self) -> Result<RingElement> {
        self.ring_from(&Representation::identity(self.quiver.clone()))
    }

    fn check(&self, x: &RingElement) -> Result<()> {
        if *x.quiver != *self.quiver {
            return Err(Error::QuiverMismatch);
        }
        Ok(())
    }

    pub fn ring_add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.add(b))
    }

    pub fn ring_sub(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.add(&b.scale(-1)))
    }

    /// Bilinear extension of `[V]·[W] = [V ⊗ W]` over class representatives.
    pub fn ring_mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = RingElement::zero(self.quiver.clone());
        for (&i, &ci) in &a.coeffs {
            for (&j, &cj) in &b.coeffs {
                let prod = self.class_product(i, j)?;
                out = out.add(&prod.scale(ci * cj));
            }
        }
        Ok(out)
    }

    fn class_product(&self, i: ClassId, j: ClassId) -> Result<RingElement> {
        let key = (i.min(j), i.max(j));
        if let Some(p) = self.products.lock().expect("product cache").get(&key) {
            return Ok(p.clone());
        }
        let (vi, vj) = (self.class(i).representative, self.class(j).representative);
        let p = self.ring_from(&vi.tensor(&vj)?)?;
        self.products.lock().expect("product cache").insert(key, p.clone());
        Ok(p)
    }

    /// Linear extension of each rank function over the coefficients of `x`.
    pub fn rank_vector(&self, x: &RingElement, fns: &[RankFn]) -> Result<Vec<i64>> {
        self.check(x)?;
        let mut out = vec![0i64; fns.len()];
        for (&id, &c) in &x.coeffs {
            let v = self.class(id).representative;
            for (k, f) in fns.iter().enumerate() {
                out[k] += c * f.eval(&v)? as i64;
            }
        }
        Ok(out)
    }

    /// `x` written as `c·[label]` terms in display order.
    pub fn format(&self, x: &RingElement, label: impl Fn(&IndecClass) -> String) -> String {
        let order = self.display_order();
        let terms: Vec<String> = order
            .iter()
            .filter_map(|id| x.coeffs.get(id).map(|&c| (id, c)))
            .map(|(&id, c)| {
                let l = label(&self.class(id));
                match c {
                    1 => l,
                    -1 => format!("-{l}"),
                    _ => format!("{c}{l}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }
}

/// Element of the representation ring: integer coefficients on class ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    quiver: Arc<Quiver>,
    coeffs: BTreeMap<ClassId, i64>,
}

impl RingElement {
    pub fn zero(quiver: Arc<Quiver>) -> Self {
        RingElement { quiver, coeffs: BTreeMap::new() }
    }

    pub fn coeffs(&self) -> &BTreeMap<ClassId, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, id: ClassId) -> i64 {
        self.coeffs.get(&id).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, id: ClassId, c: i64) {
        let e = self.coeffs.entry(id).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&id);
        }
    }

    fn add(&self, other: &RingElement) -> RingElement {
        let mut out = self.clone();
        for (&id, &c) in &other.coeffs {
            out.add_term(id, c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> RingElement {
        if c == 0 {
            return RingElement::zero(self.quiver.clone());
        }
        RingElement { quiver: self.quiver.clone(), coeffs: self.coeffs.iter().map(|(&k, &v)| (k, v * c)).collect() }
    }
}

/// A rank function on representations of a fixed quiver.
#[derive(Clone, Debug)]
pub enum RankFn {
    /// `r_Q`
    Global,
    /// `r_P` for a connected subquiver `P`
    Subquiver(Subquiver),
    /// `α_* r_{Q'}` for `α : Q' → Q`
    Pushforward(QuiverMorphism),
}

impl RankFn {
    pub fn eval(&self, v: &R) -> Result<usize> {
        match self {
            RankFn::Global => global_rank(v),
            RankFn::Subquiver(p) => subquiver_rank(v, p),
            RankFn::Pushforward(a) => pushforward_rank(a, v),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn classes_are_shared() {
        let reg = ClassRegistry::new(fixtures::qa()).unwrap();
        let a = reg.classify(&fixtures::w()).unwrap();
        let b = reg.classify(&fixtures::w()).unwrap();
        assert_eq!(a, b);
        assert_eq!(reg.len(), 1);
        let one = reg.one().unwrap();
        let x = reg.ring_from(&fixtures::w()).unwrap();
        assert_eq!(reg.ring_mul(&x, &one).unwrap(), x);
    }

    #[test]
    fn w_squared() {
        let reg = ClassRegistry::new(fixtures::qa()).unwrap();
        let x = reg.ring_from(&fixtures::w()).unwrap();
        let sq = reg.ring_mul(&x, &x).unwrap();
        let s3 = reg.classify(&Representation::simple(fixtures::qa(), 2)).unwrap();
        let wid = reg.classify(&fixtures::w()).unwrap();
        assert_eq!(sq.coeff(wid), 1);
        assert_eq!(sq.coeff(s3), 2);
        assert_eq!(sq.coeffs().len(), 2);
    }

    #[test]
    fn identity_has_rank_one_everywhere() {
        let reg = ClassRegistry::new(fixtures::qa()).unwrap();
        let mut fns: Vec<RankFn> = reg.subquivers().iter().cloned().map(RankFn::Subquiver).collect();
        fns.push(RankFn::Pushforward(fixtures::alpha()));
        fns.push(RankFn::Global);
        let v = reg.rank_vector(&reg.one().unwrap(), &fns).unwrap();
        assert!(v.iter().all(|&r| r == 1));
    }

    #[test]
    fn decomposable_input_is_rejected() {
        let reg = ClassRegistry::new(fixtures::qa()).unwrap();
        let one = Representation::identity(fixtures::qa());
        assert!(reg.classify(&one.direct_sum(&one).unwrap()).is_err());
    }
}
