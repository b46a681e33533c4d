use std::sync::Arc;

use num_complex::Complex64;

use super::group::{GlGroup, GroupId};
use crate::error::{Error, Result};

/// Residue above which a value that must be an integer is treated as a bug.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-6;

/// A complex class function on an enumerated `GL_n(F_q)`, one value per
/// conjugacy class (in the group's class order).
#[derive(Debug, Clone)]
pub struct ClassFunction {
    group: Arc<GlGroup>,
    values: Vec<Complex64>,
}

impl ClassFunction {
    pub fn new(group: Arc<GlGroup>, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != group.classes().len() {
            return Err(Error::InvalidParameter(format!(
                "{} has {} classes, got {} values",
                group.id(),
                group.classes().len(),
                values.len()
            )));
        }
        Ok(ClassFunction { group, values })
    }

    pub fn from_fn(group: Arc<GlGroup>, f: impl Fn(usize) -> Complex64) -> Self {
        let values = (0..group.classes().len()).map(f).collect();
        ClassFunction { group, values }
    }

    pub fn group(&self) -> &Arc<GlGroup> {
        &self.group
    }

    pub fn group_id(&self) -> GroupId {
        self.group.id()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value_at_class(&self, c: usize) -> Complex64 {
        self.values[c]
    }

    /// Value at the element with index `i` in the group's element list.
    pub fn value_at_index(&self, i: usize) -> Complex64 {
        self.values[self.group.class_of_index(i)]
    }

    /// Value at the identity.
    pub fn degree(&self) -> Complex64 {
        let id = self
            .group
            .index_of(&super::matrix::Mat::identity(self.group.n()))
            .expect("identity is in the group");
        self.value_at_index(id)
    }

    fn same_group(&self, other: &ClassFunction) -> Result<()> {
        if self.group_id() != other.group_id() {
            return Err(Error::InvalidParameter(format!(
                "class functions on {} and {}",
                self.group_id(),
                other.group_id()
            )));
        }
        Ok(())
    }

    /// `(1/|G|) sum_g self(g) conj(other(g))`.
    pub fn inner(&self, other: &ClassFunction) -> Result<Complex64> {
        self.same_group(other)?;
        let sum: Complex64 = self
            .group
            .classes()
            .iter()
            .zip(self.values.iter().zip(&other.values))
            .map(|(c, (a, b))| a * b.conj() * c.size as f64)
            .sum();
        Ok(sum / self.group.order() as f64)
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.same_group(other)?;
        Ok(ClassFunction {
            group: Arc::clone(&self.group),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, s: f64) -> ClassFunction {
        ClassFunction {
            group: Arc::clone(&self.group),
            values: self.values.iter().map(|v| v * s).collect(),
        }
    }

    pub fn zero(group: Arc<GlGroup>) -> ClassFunction {
        Self::from_fn(group, |_| Complex64::new(0.0, 0.0))
    }

    pub fn trivial(group: Arc<GlGroup>) -> ClassFunction {
        Self::from_fn(group, |_| Complex64::new(1.0, 0.0))
    }

    /// Largest pointwise modulus of `self - other`.
    pub fn max_residue(&self, other: &ClassFunction) -> Result<f64> {
        self.same_group(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

/// Rounds `z` to an integer, failing when it is more than
/// [`INTEGRALITY_TOLERANCE`] away from one.
pub fn exact_integer(z: Complex64) -> Result<i64> {
    let r = z.re.round();
    let residue = (z.re - r).abs().max(z.im.abs());
    if residue > INTEGRALITY_TOLERANCE {
        return Err(Error::NumericalIntegrity { value: format!("{z}"), residue });
    }
    Ok(r as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrality_gate() {
        assert_eq!(exact_integer(Complex64::new(2.0000001, 1e-9)).unwrap(), 2);
        assert_eq!(exact_integer(Complex64::new(-3.0, 0.0)).unwrap(), -3);
        assert!(matches!(
            exact_integer(Complex64::new(2.01, 0.0)),
            Err(Error::NumericalIntegrity { .. })
        ));
        assert!(exact_integer(Complex64::new(2.0, 1e-3)).is_err());
    }

    #[test]
    fn trivial_character_has_norm_one() {
        let g = GlGroup::get(2, 3).unwrap();
        let one = ClassFunction::trivial(Arc::clone(&g));
        assert_eq!(exact_integer(one.inner(&one).unwrap()).unwrap(), 1);
        assert_eq!(exact_integer(one.degree()).unwrap(), 1);
        let other = ClassFunction::trivial(GlGroup::get(2, 2).unwrap());
        assert!(one.inner(&other).is_err());
    }
}
