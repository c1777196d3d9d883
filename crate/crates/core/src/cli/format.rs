//! The algebra file format.
//!
//! ```json
//! {
//!   "dim": 2,
//!   "basis": ["e0", "e1"],
//!   "left": [[0, 0, 1, "1"]],
//!   "right": [[0, 0, 1, "1"]]
//! }
//! ```
//!
//! An entry `[i, j, k, c]` sets the coefficient of basis vector `k` in `e_i ∘ e_j` to the
//! rational `c`, written `"p"` or `"p/q"`. Indices are 0-based. Missing entries are zero
//! and a repeated `(i, j, k)` is rejected. Optional blocks:
//!
//! - `defining_pair`: `{ "base": path, "kernel": [[..]], "basis_map": [[..]] }` marks this
//!   algebra `K` with the ideal spanned by `kernel` as a defining pair of the algebra in
//!   `base` (resolved relative to this file). `basis_map` has one row per basis vector of
//!   the base and one column per quotient coordinate of `K/M`.
//! - `generator`: parameters that reproduce a generated algebra.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cohomology::Category;
use crate::dialg::{DiAlgebra, Product};
use crate::exactlin::{Mat, Scalar, Subspace};
use crate::{Error, Rat, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry(pub usize, pub usize, pub usize, pub String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefiningPairSpec {
    pub base: String,
    pub kernel: Vec<Vec<String>>,
    pub basis_map: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorMeta {
    pub seed: u64,
    pub dim_base: usize,
    pub steps: usize,
    pub max_new: usize,
    pub category: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default)]
    pub basis: Vec<String>,
    #[serde(default)]
    pub left: Vec<Entry>,
    #[serde(default)]
    pub right: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defining_pair: Option<DefiningPairSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorMeta>,
}

fn parse_scalar(field: &str, s: &str) -> Result<Rat> {
    Rat::parse(s).ok_or_else(|| Error::Parse(format!("{field}: `{s}` is not a rational")))
}

fn parse_entries(dim: usize, field: &str, entries: &[Entry]) -> Result<Vec<(usize, usize, usize, Rat)>> {
    let mut seen = BTreeMap::new();
    let mut out = Vec::with_capacity(entries.len());
    for (pos, Entry(i, j, k, c)) in entries.iter().enumerate() {
        let here = format!("{field}[{pos}]");
        if *i >= dim || *j >= dim || *k >= dim {
            return Err(Error::Parse(format!(
                "{here}: index ({i}, {j}, {k}) out of range for dim {dim}"
            )));
        }
        if let Some(first) = seen.insert((*i, *j, *k), pos) {
            return Err(Error::Parse(format!(
                "{here}: duplicate key ({i}, {j}, {k}), first given at {field}[{first}]"
            )));
        }
        out.push((*i, *j, *k, parse_scalar(&here, c)?));
    }
    Ok(out)
}

fn entries_of(a: &DiAlgebra<Rat>, p: Product) -> Vec<Entry> {
    let n = a.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = a.sc(p, i, j, k);
                if !c.is_zero() {
                    out.push(Entry(i, j, k, c.to_string()));
                }
            }
        }
    }
    out
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("malformed algebra file: {e}")))
    }

    pub fn from_algebra(a: &DiAlgebra<Rat>) -> Self {
        AlgebraFile {
            dim: a.dim(),
            basis: a.names().to_vec(),
            left: entries_of(a, Product::Left),
            right: entries_of(a, Product::Right),
            defining_pair: None,
            generator: None,
        }
    }

    pub fn to_algebra(&self) -> Result<DiAlgebra<Rat>> {
        let left = parse_entries(self.dim, "left", &self.left)?;
        let right = parse_entries(self.dim, "right", &self.right)?;
        let a = DiAlgebra::from_entries(self.dim, &left, &right)?;
        if self.basis.is_empty() {
            return Ok(a);
        }
        if self.basis.len() != self.dim {
            return Err(Error::Parse(format!(
                "basis: {} names given for dim {}",
                self.basis.len(),
                self.dim
            )));
        }
        a.with_names(self.basis.clone())
    }

    /// Sorted entries, zeros dropped, coefficients in lowest terms, one entry per line.
    pub fn to_canonical_string(&self) -> String {
        let mut fields = vec![
            format!("  \"dim\": {}", self.dim),
            format!("  \"basis\": {}", json(&self.basis)),
            format!("  \"left\": {}", entry_list(&self.left)),
            format!("  \"right\": {}", entry_list(&self.right)),
        ];
        if let Some(dp) = &self.defining_pair {
            fields.push(format!(
                "  \"defining_pair\": {{\n    \"base\": {},\n    \"kernel\": {},\n    \"basis_map\": {}\n  }}",
                json(&dp.base),
                json(&dp.kernel),
                json(&dp.basis_map)
            ));
        }
        if let Some(g) = &self.generator {
            fields.push(format!("  \"generator\": {}", json(g)));
        }
        format!("{{\n{}\n}}\n", fields.join(",\n"))
    }

    /// Canonical form of this file: the algebra is re-emitted, the optional blocks kept.
    pub fn canonicalize(&self) -> Result<Self> {
        let a = self.to_algebra()?;
        let mut out = AlgebraFile::from_algebra(&a);
        out.defining_pair = self.defining_pair.clone();
        out.generator = self.generator.clone();
        Ok(out)
    }
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

fn entry_list(entries: &[Entry]) -> String {
    if entries.is_empty() {
        return "[]".into();
    }
    let mut sorted = entries.to_vec();
    sorted.sort_by_key(|e| (e.0, e.1, e.2));
    let lines: Vec<String> = sorted
        .iter()
        .map(|e| format!("    {}", json(e)))
        .collect();
    format!("[\n{}\n  ]", lines.join(",\n"))
}

/// A parsed file together with the raw bytes it came from.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub path: PathBuf,
    pub bytes: Vec<u8>,
    pub file: AlgebraFile,
}

impl Loaded {
    pub fn sha256(&self) -> String {
        use sha2::{Digest, Sha256};
        hex::encode(Sha256::digest(&self.bytes))
    }
}

pub fn load(path: &Path) -> Result<Loaded> {
    let bytes = std::fs::read(path)?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|e| Error::Parse(format!("{}: not UTF-8: {e}", path.display())))?;
    let file = AlgebraFile::parse(text)?;
    Ok(Loaded {
        path: path.to_path_buf(),
        bytes,
        file,
    })
}

pub fn load_algebra(path: &Path) -> Result<DiAlgebra<Rat>> {
    load(path)?.file.to_algebra()
}

fn parse_matrix(field: &str, rows: &[Vec<String>], cols: usize) -> Result<Mat<Rat>> {
    let mut out = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::Parse(format!(
                "{field}[{r}]: {} entries, expected {cols}",
                row.len()
            )));
        }
        out.push(
            row.iter()
                .enumerate()
                .map(|(c, s)| parse_scalar(&format!("{field}[{r}][{c}]"), s))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Ok(Mat::from_rows(cols, out))
}

/// Everything [`crate::cohomology::verify_defining_pair`] needs, read from a file's
/// `defining_pair` block.
#[derive(Clone, Debug)]
pub struct DefiningPair {
    pub cover: DiAlgebra<Rat>,
    pub kernel: Subspace<Rat>,
    pub base: DiAlgebra<Rat>,
    pub basis_map: Mat<Rat>,
}

pub fn load_defining_pair(loaded: &Loaded) -> Result<DefiningPair> {
    let spec = loaded
        .file
        .defining_pair
        .as_ref()
        .ok_or_else(|| Error::Parse("defining_pair: block missing".into()))?;
    let cover = loaded.file.to_algebra()?;
    let base_path = loaded
        .path
        .parent()
        .unwrap_or_else(|| Path::new("."))
        .join(&spec.base);
    let base = load_algebra(&base_path)?;
    let kernel = parse_matrix("defining_pair.kernel", &spec.kernel, cover.dim())?;
    let kernel = Subspace::row_space(&kernel);
    let q = cover.dim() - kernel.dim();
    let basis_map = parse_matrix("defining_pair.basis_map", &spec.basis_map, q)?;
    Ok(DefiningPair {
        cover,
        kernel,
        base,
        basis_map,
    })
}

/// Ideal given as `"v1;v2;..."`, each a comma-separated list of rationals.
pub fn parse_ideal(spec: &str, dim: usize) -> Result<Subspace<Rat>> {
    let mut vectors = Vec::new();
    for (pos, part) in spec.split(';').enumerate() {
        if part.trim().is_empty() {
            continue;
        }
        let v = crate::exactlin::parse_vector::<Rat>(part)
            .ok_or_else(|| Error::Parse(format!("ideal vector {pos}: `{part}` is not a list of rationals")))?;
        if v.len() != dim {
            return Err(Error::Parse(format!(
                "ideal vector {pos}: {} coordinates, expected {dim}",
                v.len()
            )));
        }
        vectors.push(v);
    }
    Ok(Subspace::from_vectors(dim, vectors))
}

pub fn parse_category(s: &str) -> Result<Category> {
    s.parse()
}
