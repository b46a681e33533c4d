//! Enumerated `GL_n(F_p)` with brute-force conjugacy classes.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use super::matrix::{Mat, PrimeField, MAX_DIM};
use crate::error::{Error, Result};

/// Largest group the oracle will enumerate.
pub const MAX_GROUP_ORDER: u64 = 25_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupId {
    pub n: usize,
    pub q: u32,
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GL_{}(F_{})", self.n, self.q)
    }
}

/// `|GL_n(F_q)| = prod_{i<n} (q^n - q^i)`, or `None` on overflow.
pub fn gl_order(n: usize, q: u32) -> Option<u64> {
    let qn = (q as u64).checked_pow(n as u32)?;
    (0..n).try_fold(1u64, |acc, i| acc.checked_mul(qn - (q as u64).pow(i as u32)))
}

#[derive(Debug, Clone, Copy)]
pub struct ConjClass {
    pub rep: usize,
    pub size: usize,
}

#[derive(Debug)]
pub struct GlGroup {
    id: GroupId,
    field: PrimeField,
    elements: Vec<Mat>,
    index_of_code: HashMap<u32, usize>,
    inverse: Vec<usize>,
    class_of: Vec<usize>,
    classes: Vec<ConjClass>,
}

fn cache() -> &'static Mutex<HashMap<GroupId, Arc<GlGroup>>> {
    static CACHE: OnceLock<Mutex<HashMap<GroupId, Arc<GlGroup>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl GlGroup {
    /// The cached group table for `GL_n(F_q)`, built on first use.
    pub fn get(n: usize, q: u32) -> Result<Arc<GlGroup>> {
        let id = GroupId { n, q };
        if let Some(g) = cache().lock().expect("group cache poisoned").get(&id) {
            return Ok(Arc::clone(g));
        }
        let g = Arc::new(Self::build(id)?);
        let mut guard = cache().lock().expect("group cache poisoned");
        Ok(Arc::clone(guard.entry(id).or_insert(g)))
    }

    fn build(id: GroupId) -> Result<GlGroup> {
        let GroupId { n, q } = id;
        let field = PrimeField::new(q)
            .ok_or_else(|| Error::InvalidParameter(format!("oracle needs a prime q, got {q}")))?;
        if n > MAX_DIM {
            return Err(Error::Resource(format!("{id}: n exceeds {MAX_DIM}")));
        }
        let order = gl_order(n, q).filter(|&o| o <= MAX_GROUP_ORDER).ok_or_else(|| {
            Error::Resource(format!("{id} has more than {MAX_GROUP_ORDER} elements"))
        })?;

        let total = q.pow((n * n) as u32);
        let elements: Vec<Mat> = (0..total)
            .map(|c| Mat::decode(c, n, q))
            .filter(|m| m.det(&field) != 0)
            .collect();
        if elements.len() as u64 != order {
            return Err(Error::Internal(format!("{id}: enumerated {} elements", elements.len())));
        }
        let index_of_code: HashMap<u32, usize> =
            elements.iter().enumerate().map(|(i, m)| (m.encode(q), i)).collect();
        let inverse: Vec<usize> = elements
            .par_iter()
            .map(|m| index_of_code[&m.inverse(&field).expect("invertible").encode(q)])
            .collect();

        let mut class_of = vec![usize::MAX; elements.len()];
        let mut classes = Vec::new();
        for g in 0..elements.len() {
            if class_of[g] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let orbit: Vec<usize> = (0..elements.len())
                .into_par_iter()
                .map(|x| {
                    let conj = elements[x]
                        .mul(&elements[g], &field)
                        .mul(&elements[inverse[x]], &field);
                    index_of_code[&conj.encode(q)]
                })
                .collect();
            let mut size = 0;
            for h in orbit {
                if class_of[h] == usize::MAX {
                    class_of[h] = c;
                    size += 1;
                }
            }
            classes.push(ConjClass { rep: g, size });
        }
        Ok(GlGroup { id, field, elements, index_of_code, inverse, class_of, classes })
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    pub fn n(&self) -> usize {
        self.id.n
    }

    pub fn q(&self) -> u32 {
        self.id.q
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Mat {
        &self.elements[i]
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn index_of(&self, m: &Mat) -> Option<usize> {
        self.index_of_code.get(&m.encode(self.id.q)).copied()
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_of_index(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_of(&self, m: &Mat) -> Option<usize> {
        self.index_of(m).map(|i| self.class_of[i])
    }

    /// `x^{-1} g x` for element indices.
    pub fn conjugate(&self, g: &Mat, x: usize) -> Mat {
        self.elements[self.inverse[x]]
            .mul(g, &self.field)
            .mul(&self.elements[x], &self.field)
    }
}
