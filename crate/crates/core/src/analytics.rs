//! Corpus statistics, node-type distributions, cosine similarity and PCA.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::language::LanguageId;
use crate::schema::UniversalFileRecord;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LanguageStats {
    pub file_count: usize,
    pub avg_nodes_per_file: f64,
    /// Mean of nodes/lines over files with at least one line.
    pub avg_density: f64,
}

/// Per-language means. Float sums run over sorted values so that the
/// result does not depend on record order.
pub fn corpus_stats(records: &[UniversalFileRecord]) -> BTreeMap<LanguageId, LanguageStats> {
    let mut grouped: BTreeMap<LanguageId, (usize, u64, Vec<f64>)> = BTreeMap::new();
    for r in records {
        let entry = grouped.entry(r.language).or_default();
        entry.0 += 1;
        entry.1 += r.metadata.nodes as u64;
        if r.metadata.lines > 0 {
            entry.2.push(r.metadata.nodes as f64 / r.metadata.lines as f64);
        }
    }
    grouped
        .into_iter()
        .map(|(lang, (files, nodes, mut densities))| {
            densities.sort_by(f64::total_cmp);
            let avg_density = if densities.is_empty() {
                0.0
            } else {
                densities.iter().sum::<f64>() / densities.len() as f64
            };
            let stats = LanguageStats {
                file_count: files,
                avg_nodes_per_file: nodes as f64 / files as f64,
                avg_density,
            };
            (lang, stats)
        })
        .collect()
}

/// Sorted set of every node-type name observed across `records`.
pub fn vocabulary(records: &[UniversalFileRecord]) -> Vec<String> {
    let set: BTreeSet<&str> = records
        .iter()
        .flat_map(|r| r.nodes.iter().map(|n| n.kind.as_str()))
        .collect();
    set.into_iter().map(str::to_string).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeTypeDistribution {
    pub language: LanguageId,
    pub counts: BTreeMap<String, u64>,
    /// Frequencies laid out over the run vocabulary; sums to 1 when any node
    /// exists.
    pub vector: Vec<f64>,
}

impl NodeTypeDistribution {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Most frequent type; ties go to the lexicographically smaller name.
    pub fn top_type(&self) -> Option<&str> {
        self.counts
            .iter()
            .max_by(|a, b| a.1.cmp(b.1).then_with(|| b.0.cmp(a.0)))
            .map(|(k, _)| k.as_str())
    }
}

fn distribution_over(
    records: &[UniversalFileRecord],
    language: LanguageId,
    vocab: &[String],
) -> Result<NodeTypeDistribution> {
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut seen = false;
    for r in records.iter().filter(|r| r.language == language) {
        seen = true;
        for n in &r.nodes {
            *counts.entry(n.kind.clone()).or_default() += 1;
        }
    }
    if !seen {
        return Err(Error::EmptyDistribution(language));
    }
    let total: u64 = counts.values().sum();
    let vector = vocab
        .iter()
        .map(|t| match (counts.get(t), total) {
            (Some(&c), t) if t > 0 => c as f64 / t as f64,
            _ => 0.0,
        })
        .collect();
    Ok(NodeTypeDistribution {
        language,
        counts,
        vector,
    })
}

/// Distribution of one language over the vocabulary of all `records`.
pub fn node_type_distribution(
    records: &[UniversalFileRecord],
    language: LanguageId,
) -> Result<NodeTypeDistribution> {
    distribution_over(records, language, &vocabulary(records))
}

/// Distributions for every language present, in canonical language order.
pub fn node_type_distributions(records: &[UniversalFileRecord]) -> Vec<NodeTypeDistribution> {
    let vocab = vocabulary(records);
    let languages: BTreeSet<LanguageId> = records.iter().map(|r| r.language).collect();
    languages
        .into_iter()
        .map(|l| distribution_over(records, l, &vocab).expect("language present"))
        .collect()
}

pub fn cosine(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(a.len(), b.len()));
    }
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na: f64 = a.iter().map(|x| x * x).sum();
    let nb: f64 = b.iter().map(|x| x * x).sum();
    if na == 0.0 || nb == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok((dot / (na.sqrt() * nb.sqrt())).clamp(0.0, 1.0))
}

pub fn cosine_similarity(a: &NodeTypeDistribution, b: &NodeTypeDistribution) -> Result<f64> {
    cosine(&a.vector, &b.vector)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimilarityMatrix {
    pub languages: Vec<LanguageId>,
    pub values: Vec<Vec<f64>>,
}

impl SimilarityMatrix {
    pub fn get(&self, a: LanguageId, b: LanguageId) -> Option<f64> {
        let i = self.languages.iter().position(|&l| l == a)?;
        let j = self.languages.iter().position(|&l| l == b)?;
        Some(self.values[i][j])
    }

    /// Off-diagonal pair with the largest similarity.
    pub fn max_pair(&self) -> Option<(LanguageId, LanguageId, f64)> {
        let mut best: Option<(LanguageId, LanguageId, f64)> = None;
        for i in 0..self.languages.len() {
            for j in (i + 1)..self.languages.len() {
                let v = self.values[i][j];
                if best.is_none_or(|(_, _, b)| v > b) {
                    best = Some((self.languages[i], self.languages[j], v));
                }
            }
        }
        best
    }

    /// CSV with a header row and a leading language column.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("language");
        for l in &self.languages {
            out.push(',');
            out.push_str(l.name());
        }
        out.push('\n');
        for (l, row) in self.languages.iter().zip(&self.values) {
            out.push_str(l.name());
            for v in row {
                let _ = write!(out, ",{v}");
            }
            out.push('\n');
        }
        out
    }
}

pub fn similarity_from_distributions(dists: &[NodeTypeDistribution]) -> Result<SimilarityMatrix> {
    if dists.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "similarity needs at least 2 languages, found {}",
            dists.len()
        )));
    }
    let n = dists.len();
    let mut values = vec![vec![0.0; n]; n];
    for i in 0..n {
        // A nonzero vector is exactly self-similar.
        cosine_similarity(&dists[i], &dists[i])?;
        values[i][i] = 1.0;
        for j in (i + 1)..n {
            let v = cosine_similarity(&dists[i], &dists[j])?;
            values[i][j] = v;
            values[j][i] = v;
        }
    }
    Ok(SimilarityMatrix {
        languages: dists.iter().map(|d| d.language).collect(),
        values,
    })
}

pub fn similarity_matrix(records: &[UniversalFileRecord]) -> Result<SimilarityMatrix> {
    similarity_from_distributions(&node_type_distributions(records))
}

// ----------------------------------------------------------------------------
// PCA

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Projection {
    pub languages: Vec<LanguageId>,
    /// One k-vector per language.
    pub coordinates: Vec<Vec<f64>>,
    /// Share of total variance per axis, non-increasing.
    pub explained_variance: Vec<f64>,
    /// Unit principal directions in feature space, one per axis.
    pub components: Vec<Vec<f64>>,
    pub mean: Vec<f64>,
}

impl Projection {
    /// CSV `language,x,y,...` plus a final `explained_variance` row.
    pub fn to_csv(&self) -> String {
        let axes = ["x", "y", "z"];
        let k = self.explained_variance.len();
        let mut out = String::from("language");
        for i in 0..k {
            let name = axes.get(i).map(|s| s.to_string()).unwrap_or(format!("pc{}", i + 1));
            out.push(',');
            out.push_str(&name);
        }
        out.push('\n');
        for (l, row) in self.languages.iter().zip(&self.coordinates) {
            out.push_str(l.name());
            for v in row {
                let _ = write!(out, ",{v}");
            }
            out.push('\n');
        }
        out.push_str("explained_variance");
        for v in &self.explained_variance {
            let _ = write!(out, ",{v}");
        }
        out.push('\n');
        out
    }
}

/// Projects the mean-centered frequency vectors onto their top-k right
/// singular directions. Each direction is signed so that its
/// largest-magnitude component is positive.
pub fn pca_project(distributions: &[NodeTypeDistribution], k: usize) -> Result<Projection> {
    let rows: Vec<&[f64]> = distributions.iter().map(|d| d.vector.as_slice()).collect();
    let mut projection = pca_rows(&rows, k)?;
    projection.languages = distributions.iter().map(|d| d.language).collect();
    Ok(projection)
}

/// PCA over raw row vectors; `languages` is left empty.
pub fn pca_rows(rows: &[&[f64]], k: usize) -> Result<Projection> {
    let n = rows.len();
    if n < 2 {
        return Err(Error::InsufficientData(format!("PCA needs at least 2 rows, found {n}")));
    }
    let d = rows[0].len();
    if let Some(bad) = rows.iter().find(|r| r.len() != d) {
        return Err(Error::DimensionMismatch(d, bad.len()));
    }
    if d == 0 {
        return Err(Error::InsufficientData("PCA needs at least one feature".into()));
    }

    let mean: Vec<f64> = (0..d)
        .map(|j| rows.iter().map(|r| r[j]).sum::<f64>() / n as f64)
        .collect();
    let centered = DMatrix::from_fn(n, d, |i, j| rows[i][j] - mean[j]);

    let svd = centered.clone().svd(false, true);
    let v_t = svd.v_t.as_ref().expect("requested V^T");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));

    let total: f64 = svd.singular_values.iter().map(|s| s * s).sum();
    let mut components = Vec::with_capacity(k);
    let mut explained_variance = Vec::with_capacity(k);
    for axis in 0..k {
        match order.get(axis) {
            Some(&idx) => {
                let mut dir: Vec<f64> = v_t.row(idx).iter().copied().collect();
                let pivot = dir
                    .iter()
                    .enumerate()
                    .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()).then(b.0.cmp(&a.0)))
                    .map(|(i, _)| i)
                    .unwrap_or(0);
                if dir[pivot] < 0.0 {
                    dir.iter_mut().for_each(|x| *x = -*x);
                }
                let s = svd.singular_values[idx];
                explained_variance.push(if total > 0.0 { s * s / total } else { 0.0 });
                components.push(dir);
            }
            None => {
                explained_variance.push(0.0);
                components.push(vec![0.0; d]);
            }
        }
    }

    let coordinates = (0..n)
        .map(|i| {
            components
                .iter()
                .map(|c| (0..d).map(|j| centered[(i, j)] * c[j]).sum())
                .collect()
        })
        .collect();

    Ok(Projection {
        languages: Vec::new(),
        coordinates,
        explained_variance,
        components,
        mean,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(lang: LanguageId, v: &[f64]) -> NodeTypeDistribution {
        NodeTypeDistribution {
            language: lang,
            counts: BTreeMap::new(),
            vector: v.to_vec(),
        }
    }

    #[test]
    fn cosine_examples() {
        let a = [0.5, 0.0, 0.5];
        let b = [0.5, 0.5, 0.0];
        assert!((cosine(&a, &a).unwrap() - 1.0).abs() < 1e-12);
        assert!((cosine(&a, &b).unwrap() - 0.5).abs() < 1e-12);
        assert_eq!(cosine(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), 0.0);
        assert!(matches!(cosine(&[0.0, 0.0], &[1.0, 0.0]), Err(Error::ZeroVector)));
        assert!(matches!(cosine(&[1.0], &[1.0, 0.0]), Err(Error::DimensionMismatch(1, 2))));
    }

    #[test]
    fn matrix_needs_two_languages() {
        let d = [dist(LanguageId::C, &[1.0])];
        assert!(similarity_from_distributions(&d).is_err());
    }

    #[test]
    fn identical_distributions_are_fully_similar() {
        let d = [dist(LanguageId::C, &[0.2, 0.8]), dist(LanguageId::Cpp, &[0.2, 0.8])];
        let m = similarity_from_distributions(&d).unwrap();
        assert!((m.values[0][1] - 1.0).abs() < 1e-12);
        assert_eq!(m.values[0][0], 1.0);
        let d = [dist(LanguageId::C, &[1.0, 0.0]), dist(LanguageId::Cpp, &[0.0, 0.5])];
        let m = similarity_from_distributions(&d).unwrap();
        assert_eq!(m.to_csv(), "language,C,C++\nC,1,0\nC++,0,1\n");
    }

    #[test]
    fn pca_identical_inputs_collapse_to_origin() {
        let d = vec![dist(LanguageId::C, &[0.1, 0.2, 0.7]); 3];
        let p = pca_project(&d, 2).unwrap();
        for row in &p.coordinates {
            assert!(row.iter().all(|v| v.abs() < 1e-12));
        }
        assert_eq!(p.explained_variance.len(), 2);
    }

    #[test]
    fn pca_two_points_are_mirrored() {
        let d = [dist(LanguageId::C, &[1.0, 0.0, 0.0]), dist(LanguageId::Go, &[0.0, 0.5, 0.5])];
        let p = pca_project(&d, 2).unwrap();
        let (a, b) = (&p.coordinates[0], &p.coordinates[1]);
        assert!((a[0] + b[0]).abs() < 1e-12);
        assert!(a[0].abs() > 0.1);
        assert!(a[1].abs() < 1e-12 && b[1].abs() < 1e-12);
        assert!((p.explained_variance[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pca_needs_two_rows() {
        assert!(pca_project(&[dist(LanguageId::C, &[1.0])], 2).is_err());
    }

    #[test]
    fn pca_csv_shape() {
        let d = [dist(LanguageId::C, &[1.0, 0.0]), dist(LanguageId::Go, &[0.0, 1.0])];
        let csv = pca_project(&d, 2).unwrap().to_csv();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "language,x,y");
        assert!(lines[1].starts_with("C,"));
        assert!(lines[3].starts_with("explained_variance,"));
    }
}
