use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linear::{Color, MultiMap, Permutation, Spaces};
use crate::prop::{GeneratorId, Model};

/// An algebra over one of the models: the spaces `U = T_B`, `V = T_W` and
/// the images of the structure generators (`μ_U, μ_V, g` or `F, G`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraInstance {
    model: Model,
    spaces: Spaces,
    structure: BTreeMap<GeneratorId, MultiMap>,
    strict: bool,
}

impl AlgebraInstance {
    /// Builds an instance from `mu_U, mu_V, g` (As/Lie) or `F, G` (Iso), in
    /// the order of [`Model::structure_generators`]. A strict instance must
    /// satisfy the axioms.
    pub fn new(model: Model, spaces: Spaces, maps: Vec<MultiMap>, strict: bool) -> Result<Self> {
        let gens = model.structure_generators();
        if maps.len() != gens.len() {
            return Err(Error::Argument(format!("{model} takes {} structure maps, got {}", gens.len(), maps.len())));
        }
        let mut structure = BTreeMap::new();
        for (g, m) in gens.into_iter().zip(maps) {
            let info = model.info(g)?;
            let dims: Vec<usize> = info.inputs.iter().map(|&c| spaces.dim(c)).collect();
            if m.out_color() != info.output
                || m.in_colors() != info.inputs.as_slice()
                || m.out_dim() != spaces.dim(info.output)
                || m.in_dims() != dims.as_slice()
            {
                return Err(Error::Signature(format!("structure map for {g} has shape {}", m.signature())));
            }
            structure.insert(g, m);
        }
        let a = AlgebraInstance { model, spaces, structure, strict };
        if strict {
            let report = validate_algebra(&a)?;
            let failed: Vec<&str> = report.failures().map(|(name, _)| name.as_str()).collect();
            if !failed.is_empty() {
                return Err(Error::Invariant(format!("strict algebra violates {}", failed.join(", "))));
            }
        }
        Ok(a)
    }

    pub fn assoc(spaces: Spaces, mu_u: MultiMap, mu_v: MultiMap, g: MultiMap) -> Result<Self> {
        Self::new(Model::AssocMorphism, spaces, vec![mu_u, mu_v, g], false)
    }

    pub fn lie(spaces: Spaces, mu_u: MultiMap, mu_v: MultiMap, g: MultiMap) -> Result<Self> {
        Self::new(Model::LieMorphism, spaces, vec![mu_u, mu_v, g], false)
    }

    pub fn iso(spaces: Spaces, f: MultiMap, g: MultiMap) -> Result<Self> {
        Self::new(Model::Iso, spaces, vec![f, g], false)
    }

    /// The instance with every structure map zero (`T_ø` for Iso).
    pub fn trivial(model: Model, spaces: Spaces) -> Self {
        let structure = model
            .structure_generators()
            .into_iter()
            .map(|g| {
                let info = model.info(g).expect("structure generator");
                (g, spaces.zero_map(info.output, &info.inputs))
            })
            .collect();
        AlgebraInstance { model, spaces, structure, strict: false }
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn spaces(&self) -> &Spaces {
        &self.spaces
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// `β(gen)`: the structure map on degree-0 generators, `None` (zero)
    /// elsewhere.
    pub fn beta(&self, gen: GeneratorId) -> Option<&MultiMap> {
        self.structure.get(&gen)
    }

    pub fn structure(&self) -> &BTreeMap<GeneratorId, MultiMap> {
        &self.structure
    }

    /// The structure map at position `i` of [`Model::structure_generators`].
    pub fn structure_map(&self, i: usize) -> &MultiMap {
        &self.structure[&self.model.structure_generators()[i]]
    }
}

/// Exact residual of each axiom; an axiom holds iff its residual is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub residuals: Vec<(String, MultiMap)>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.residuals.iter().all(|(_, r)| r.is_zero())
    }

    pub fn failures(&self) -> impl Iterator<Item = &(String, MultiMap)> {
        self.residuals.iter().filter(|(_, r)| !r.is_zero())
    }
}

/// Checks the axioms encoded by the model directly on the structure maps:
/// associativity and multiplicativity, antisymmetry, Jacobi and bracket
/// preservation, or `GF = 1`, `FG = 1`.
pub fn validate_algebra(a: &AlgebraInstance) -> Result<AxiomReport> {
    let mut residuals = Vec::new();
    match a.model {
        Model::AssocMorphism => {
            let (mu, nu, g) = (a.structure_map(0), a.structure_map(1), a.structure_map(2));
            residuals.push(("associativity of U".to_string(), associator(mu)?));
            residuals.push(("associativity of V".to_string(), associator(nu)?));
            residuals.push(("g is multiplicative".to_string(), &g.after(mu)? - &nu.substitute(&[Some(g), Some(g)])?));
        }
        Model::LieMorphism => {
            let (mu, nu, g) = (a.structure_map(0), a.structure_map(1), a.structure_map(2));
            residuals.push(("antisymmetry of U".to_string(), symmetrizer(mu)?));
            residuals.push(("antisymmetry of V".to_string(), symmetrizer(nu)?));
            residuals.push(("Jacobi identity of U".to_string(), jacobiator(mu)?));
            residuals.push(("Jacobi identity of V".to_string(), jacobiator(nu)?));
            residuals.push(("g preserves brackets".to_string(), &g.after(mu)? - &nu.substitute(&[Some(g), Some(g)])?));
        }
        Model::Iso => {
            let (f, g) = (a.structure_map(0), a.structure_map(1));
            let dims = a.spaces();
            residuals.push(("GF = 1".to_string(), &g.after(f)? - &MultiMap::identity(Color::B, dims.b.dim)));
            residuals.push(("FG = 1".to_string(), &f.after(g)? - &MultiMap::identity(Color::W, dims.w.dim)));
        }
    }
    Ok(AxiomReport { residuals })
}

/// `(xy)z - x(yz)`.
fn associator(m: &MultiMap) -> Result<MultiMap> {
    Ok(&m.compose_at(1, m)? - &m.compose_at(2, m)?)
}

/// `[x,y] + [y,x]`.
fn symmetrizer(m: &MultiMap) -> Result<MultiMap> {
    Ok(m + &m.permute(&Permutation::from_one_based(&[2, 1])?)?)
}

/// `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
fn jacobiator(m: &MultiMap) -> Result<MultiMap> {
    let base = m.compose_at(1, m)?;
    let mut out = base.clone();
    out += &base.permute(&Permutation::from_one_based(&[2, 3, 1])?)?;
    out += &base.permute(&Permutation::from_one_based(&[3, 1, 2])?)?;
    Ok(out)
}
