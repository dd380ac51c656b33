use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algnum::AlgReal;
use crate::error::{Error, Result};

/// A based ring with nonnegative integer structure constants `N_{ij}^k`.
///
/// Products are stored sparsely: `products[i][j]` lists `(k, N_{ij}^k)` for
/// the nonzero constants, sorted by `k`.
#[derive(Clone, PartialEq, Eq)]
pub struct FusionRing {
    name: String,
    objects: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    products: Vec<Vec<Vec<(usize, u32)>>>,
    dims: Vec<AlgReal>,
}

/// One structure constant `N_{ij}^k = value`.
pub type Constant = (usize, usize, usize, u32);

impl FusionRing {
    /// Assembles a ring without checking any axiom.
    pub fn from_constants_unchecked(
        name: impl Into<String>,
        objects: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        constants: impl IntoIterator<Item = Constant>,
        dims: Vec<AlgReal>,
    ) -> Self {
        let r = objects.len();
        let mut products = vec![vec![Vec::new(); r]; r];
        for (i, j, k, v) in constants {
            if v > 0 {
                let list: &mut Vec<(usize, u32)> = &mut products[i][j];
                match list.iter_mut().find(|(kk, _)| *kk == k) {
                    Some(e) => e.1 += v,
                    None => list.push((k, v)),
                }
            }
        }
        for row in &mut products {
            for list in row {
                list.sort_unstable();
            }
        }
        FusionRing { name: name.into(), objects, unit, dual, products, dims }
    }

    /// Assembles a ring and checks every axiom. With `dims = None` the
    /// Perron–Frobenius dimensions are computed.
    pub fn new(
        name: impl Into<String>,
        objects: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        constants: impl IntoIterator<Item = Constant>,
        dims: Option<Vec<AlgReal>>,
    ) -> Result<Self> {
        let r = objects.len();
        if unit >= r || dual.len() != r || dual.iter().any(|&d| d >= r) {
            return Err(Error::Fusion("unit or dual out of range".into()));
        }
        let constants: Vec<Constant> = constants.into_iter().collect();
        if constants.iter().any(|&(i, j, k, _)| i >= r || j >= r || k >= r) {
            return Err(Error::Fusion("structure constant index out of range".into()));
        }
        let mut ring = Self::from_constants_unchecked(name, objects, unit, dual, constants, Vec::new());
        ring.dims = match dims {
            Some(d) if d.len() == r => d,
            Some(_) => return Err(Error::Fusion("dimension vector has the wrong length".into())),
            None => super::pf::pf_dimensions(&ring, super::pf::DEFAULT_CONDUCTOR_BOUND)?,
        };
        let report = super::verify::verify_axioms(&ring);
        if !report.all_passed() {
            return Err(Error::Fusion(report.first_failure()));
        }
        Ok(ring)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rename(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn rank(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object(&self, i: usize) -> &str {
        &self.objects[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn dims(&self) -> &[AlgReal] {
        &self.dims
    }

    pub fn dim(&self, i: usize) -> &AlgReal {
        &self.dims[i]
    }

    /// Decomposition of `i ⊗ j` as `(k, multiplicity)` pairs.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.products[i][j]
    }

    /// `N_{ij}^k`.
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        self.products[i][j].binary_search_by_key(&k, |&(kk, _)| kk).map_or(0, |p| self.products[i][j][p].1)
    }

    /// All nonzero constants in `(i, j, k)` order.
    pub fn constants(&self) -> Vec<Constant> {
        let mut out = Vec::new();
        for (i, row) in self.products.iter().enumerate() {
            for (j, list) in row.iter().enumerate() {
                out.extend(list.iter().map(|&(k, v)| (i, j, k, v)));
            }
        }
        out
    }

    /// `Σ_i d_i²`.
    pub fn global_dim(&self) -> AlgReal {
        self.dims.iter().map(|d| d * d).sum()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.rank()).all(|i| (0..i).all(|j| self.products[i][j] == self.products[j][i]))
    }

    /// `N_i` as a dense matrix with entries `[k][j] = N_{ij}^k`.
    pub fn fusion_matrix(&self, i: usize) -> Vec<Vec<u32>> {
        let r = self.rank();
        let mut m = vec![vec![0; r]; r];
        for j in 0..r {
            for &(k, v) in &self.products[i][j] {
                m[k][j] = v;
            }
        }
        m
    }

    /// Human-readable `i·j = a + b + 2c`.
    pub fn format_product(&self, i: usize, j: usize) -> String {
        let rhs: Vec<String> = self.products[i][j]
            .iter()
            .map(|&(k, v)| if v == 1 { self.objects[k].clone() } else { format!("{v}{}", self.objects[k]) })
            .collect();
        format!("{}·{} = {}", self.objects[i], self.objects[j], rhs.join(" + "))
    }

    /// Applies a bijection `perm` of object indices, keeping names attached to
    /// the permuted positions: constants become `N'_{π i, π j}^{π k}`.
    pub fn permuted_constants(&self, perm: &[usize]) -> BTreeMap<(usize, usize, usize), u32> {
        self.constants().into_iter().map(|(i, j, k, v)| ((perm[i], perm[j], perm[k]), v)).collect()
    }
}

impl fmt::Debug for FusionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FusionRing {} (rank {})", self.name, self.rank())?;
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                writeln!(f, "  {}", self.format_product(i, j))?;
            }
        }
        Ok(())
    }
}

/// JSON form: `{name, objects, unit, dual, constants: [[i,j,k,v]...], dims?}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FusionRingFile {
    pub name: String,
    pub objects: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    pub constants: Vec<[u64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<AlgReal>>,
}

impl From<&FusionRing> for FusionRingFile {
    fn from(r: &FusionRing) -> Self {
        FusionRingFile {
            name: r.name.clone(),
            objects: r.objects.clone(),
            unit: r.unit,
            dual: r.dual.clone(),
            constants: r
                .constants()
                .into_iter()
                .map(|(i, j, k, v)| [i as u64, j as u64, k as u64, u64::from(v)])
                .collect(),
            dims: Some(r.dims.clone()),
        }
    }
}

impl TryFrom<FusionRingFile> for FusionRing {
    type Error = Error;

    fn try_from(f: FusionRingFile) -> Result<Self> {
        let constants = f
            .constants
            .iter()
            .map(|&[i, j, k, v]| {
                let v = u32::try_from(v).map_err(|_| Error::Fusion("constant too large".into()))?;
                Ok((i as usize, j as usize, k as usize, v))
            })
            .collect::<Result<Vec<_>>>()?;
        FusionRing::new(f.name, f.objects, f.unit, f.dual, constants, f.dims)
    }
}

impl Serialize for FusionRing {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FusionRingFile::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FusionRing {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let f = FusionRingFile::deserialize(d)?;
        FusionRing::try_from(f).map_err(D::Error::custom)
    }
}
