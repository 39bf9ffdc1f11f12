use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linear::{MultiMap, Rational, Spaces};
use crate::prop::{GeneratorId, Model};

/// A homogeneous element of the deformation complex: a map on the
/// generators of internal degree `degree - 1`. Missing generators are zero,
/// and zero maps are never stored, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    model: Model,
    degree: i64,
    values: BTreeMap<GeneratorId, MultiMap>,
}

impl Cochain {
    pub fn zero(model: Model, degree: i64) -> Self {
        Cochain { model, degree, values: BTreeMap::new() }
    }

    pub fn from_values(model: Model, degree: i64, values: impl IntoIterator<Item = (GeneratorId, MultiMap)>) -> Result<Self> {
        let mut c = Cochain::zero(model, degree);
        for (g, m) in values {
            c.set(g, m)?;
        }
        Ok(c)
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// The generators this cochain may be nonzero on.
    pub fn support(&self) -> Vec<GeneratorId> {
        self.model.cochain_support(self.degree)
    }

    /// Sets the value on a generator, checking that the generator belongs to
    /// the support and the map has the generator's colors.
    pub fn set(&mut self, gen: GeneratorId, value: MultiMap) -> Result<()> {
        if !self.support().contains(&gen) {
            return Err(Error::Signature(format!(
                "a degree-{} cochain of {} has no value on {gen}",
                self.degree, self.model
            )));
        }
        let info = self.model.info(gen)?;
        if value.out_color() != info.output || value.in_colors() != info.inputs.as_slice() {
            return Err(Error::Signature(format!("{} does not match the colors of {gen}", value.signature())));
        }
        if self.model.is_skew() && !value.is_alternating() {
            return Err(Error::Invariant(format!("value on {gen} is not alternating")));
        }
        if value.is_zero() {
            self.values.remove(&gen);
        } else {
            self.values.insert(gen, value);
        }
        Ok(())
    }

    pub fn get(&self, gen: GeneratorId) -> Option<&MultiMap> {
        self.values.get(&gen)
    }

    /// The value on `gen`, with the zero map filled in.
    pub fn value_or_zero(&self, gen: GeneratorId, spaces: &Spaces) -> Result<MultiMap> {
        match self.values.get(&gen) {
            Some(m) => Ok(m.clone()),
            None => {
                let info = self.model.info(gen)?;
                Ok(spaces.zero_map(info.output, &info.inputs))
            }
        }
    }

    pub fn values(&self) -> &BTreeMap<GeneratorId, MultiMap> {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Checks every value against the dimensions of `spaces`.
    pub fn check_spaces(&self, spaces: &Spaces) -> Result<()> {
        for (g, m) in &self.values {
            let info = self.model.info(*g)?;
            let dims: Vec<usize> = info.inputs.iter().map(|&c| spaces.dim(c)).collect();
            if m.out_dim() != spaces.dim(info.output) || m.in_dims() != dims.as_slice() {
                return Err(Error::Signature(format!("value on {g} does not match the space dimensions")));
            }
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Cochain {
        let mut out = Cochain::zero(self.model, self.degree);
        if !c.is_zero() {
            for (g, m) in &self.values {
                out.values.insert(*g, m.scale(c));
            }
        }
        out
    }

    /// `self += c · other` for cochains of the same model and degree.
    pub fn add_scaled(&mut self, other: &Cochain, c: &Rational) -> Result<()> {
        if self.model != other.model || self.degree != other.degree {
            return Err(Error::Argument(format!(
                "cannot add a degree-{} {} cochain to a degree-{} {} cochain",
                other.degree, other.model, self.degree, self.model
            )));
        }
        for (g, m) in &other.values {
            match self.values.get_mut(g) {
                Some(mine) => {
                    mine.add_scaled(m, c)?;
                    if mine.is_zero() {
                        self.values.remove(g);
                    }
                }
                None => {
                    if !c.is_zero() {
                        self.values.insert(*g, m.scale(c));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Cochain) -> Result<Cochain> {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one())?;
        Ok(out)
    }
}

/// A finite sum of homogeneous cochains of different degrees.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InhomogeneousCochain {
    parts: BTreeMap<i64, Cochain>,
}

impl InhomogeneousCochain {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, c: &Cochain) -> Result<()> {
        match self.parts.get_mut(&c.degree()) {
            Some(p) => p.add_scaled(c, &Rational::one())?,
            None => {
                self.parts.insert(c.degree(), c.clone());
            }
        }
        self.parts.retain(|_, p| !p.is_zero());
        Ok(())
    }

    pub fn parts(&self) -> impl Iterator<Item = &Cochain> {
        self.parts.values()
    }

    pub fn part(&self, degree: i64) -> Option<&Cochain> {
        self.parts.get(&degree)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }
}

impl From<Cochain> for InhomogeneousCochain {
    fn from(c: Cochain) -> Self {
        let mut out = InhomogeneousCochain::new();
        out.add(&c).expect("single part");
        out
    }
}
