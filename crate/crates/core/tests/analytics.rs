mod common;

use std::collections::BTreeMap;

use common::{build, desk_records, source_strategy};
use proptest::prelude::*;
use uast_core::analytics::{
    corpus_stats, cosine, node_type_distribution, node_type_distributions, pca_project, pca_rows,
    similarity_matrix,
};
use uast_core::{AstNode, LanguageId, UniversalFileRecord};

fn synthetic(language: LanguageId, kinds: &[&str]) -> UniversalFileRecord {
    let mut r = build(LanguageId::Python, "s.py", "x");
    r.language = language;
    let template: AstNode = r.nodes[0].clone();
    r.nodes = kinds
        .iter()
        .enumerate()
        .map(|(i, k)| AstNode { id: i, kind: k.to_string(), ..template.clone() })
        .collect();
    r
}

#[test]
fn cosine_hand_values() {
    let c = cosine(&[0.5, 0.0, 0.5], &[0.5, 0.5, 0.0]).unwrap();
    assert!((c - 0.5).abs() < 1e-12, "{c}");
    let v = [0.2, 0.3, 0.5];
    assert!((cosine(&v, &v).unwrap() - 1.0).abs() < 1e-12);
    assert_eq!(cosine(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), 0.0);
    assert!(cosine(&[0.0, 0.0], &[1.0, 0.0]).is_err());
    assert!(cosine(&[1.0], &[1.0, 0.0]).is_err());
}

#[test]
fn direct_count_example() {
    let r = synthetic(LanguageId::Python, &["module", "identifier", "identifier"]);
    let d = node_type_distribution(&[r], LanguageId::Python).unwrap();
    let expected: BTreeMap<String, u64> = [("identifier".to_string(), 2), ("module".to_string(), 1)].into();
    assert_eq!(d.counts, expected);
    assert!((d.vector[0] - 2.0 / 3.0).abs() < 1e-15);
    assert!((d.vector[1] - 1.0 / 3.0).abs() < 1e-15);
}

#[test]
fn counts_are_additive() {
    let a = build(LanguageId::Go, "a.go", "package p\nfunc f() int { return 1 }\n");
    let b = build(LanguageId::Go, "b.go", "package p\nvar x = 2\n");
    let joint = node_type_distribution(&[a.clone(), b.clone()], LanguageId::Go).unwrap();
    let mut sum = node_type_distribution(&[a], LanguageId::Go).unwrap().counts;
    for (k, v) in node_type_distribution(&[b], LanguageId::Go).unwrap().counts {
        *sum.entry(k).or_default() += v;
    }
    assert_eq!(joint.counts, sum);
}

#[test]
fn missing_language_is_an_error() {
    let r = synthetic(LanguageId::Python, &["module"]);
    assert!(node_type_distribution(&[r], LanguageId::Ruby).is_err());
}

#[test]
fn corpus_stats_examples() {
    assert!(corpus_stats(&[]).is_empty());
    let r = build(LanguageId::Ruby, "a.rb", "def f\n  1\nend\n");
    let one = corpus_stats(std::slice::from_ref(&r));
    let two = corpus_stats(&[r.clone(), r.clone()]);
    assert_eq!(one[&LanguageId::Ruby].avg_nodes_per_file, two[&LanguageId::Ruby].avg_nodes_per_file);
    assert_eq!(one[&LanguageId::Ruby].avg_density, two[&LanguageId::Ruby].avg_density);
    assert_eq!(two[&LanguageId::Ruby].file_count, 2);
}

#[test]
fn identical_corpora_are_fully_similar() {
    let kinds = ["a", "b", "b", "c"];
    let m = similarity_matrix(&[synthetic(LanguageId::C, &kinds), synthetic(LanguageId::Cpp, &kinds)]).unwrap();
    assert!((m.get(LanguageId::C, LanguageId::Cpp).unwrap() - 1.0).abs() < 1e-12);
    assert!(similarity_matrix(&[synthetic(LanguageId::C, &kinds)]).is_err());
}

/// Cyclic Jacobi eigen-decomposition of a symmetric matrix.
fn jacobi(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a.len();
    let mut v: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
    for _ in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut() {
                    let (vkp, vkq) = (row[p], row[q]);
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let values = (0..n).map(|i| a[i][i]).collect();
    let vectors = (0..n).map(|j| (0..n).map(|i| v[i][j]).collect()).collect();
    (values, vectors)
}

/// PCA coordinates and variance shares from the covariance eigenproblem.
fn oracle_pca(rows: &[Vec<f64>], k: usize) -> (Vec<Vec<f64>>, Vec<f64>) {
    let n = rows.len();
    let d = rows[0].len();
    let mean: Vec<f64> = (0..d).map(|j| rows.iter().map(|r| r[j]).sum::<f64>() / n as f64).collect();
    let c: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().zip(&mean).map(|(x, m)| x - m).collect()).collect();
    let gram: Vec<Vec<f64>> = (0..d).map(|i| (0..d).map(|j| c.iter().map(|r| r[i] * r[j]).sum()).collect()).collect();
    let (values, vectors) = jacobi(gram);
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    let total: f64 = values.iter().map(|v| v.max(0.0)).sum();
    let mut coords = vec![Vec::new(); n];
    let mut shares = Vec::new();
    for &axis in order.iter().take(k) {
        let mut dir = vectors[axis].clone();
        let big = dir.iter().fold(0.0f64, |m, x| if x.abs() > m.abs() { *x } else { m });
        if big < 0.0 {
            dir.iter_mut().for_each(|x| *x = -*x);
        }
        for (i, r) in c.iter().enumerate() {
            coords[i].push(r.iter().zip(&dir).map(|(a, b)| a * b).sum());
        }
        shares.push(values[axis].max(0.0) / total);
    }
    (coords, shares)
}

fn toy_rows() -> Vec<Vec<f64>> {
    vec![
        vec![0.70, 0.20, 0.10],
        vec![0.10, 0.60, 0.30],
        vec![0.25, 0.25, 0.50],
        vec![0.40, 0.45, 0.15],
    ]
}

#[test]
fn pca_matches_eigen_oracle() {
    let rows = toy_rows();
    let refs: Vec<&[f64]> = rows.iter().map(Vec::as_slice).collect();
    let p = pca_rows(&refs, 2).unwrap();
    let (coords, shares) = oracle_pca(&rows, 2);
    for (got, want) in p.coordinates.iter().zip(&coords) {
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-9, "{got:?} vs {want:?}");
        }
    }
    for (g, w) in p.explained_variance.iter().zip(&shares) {
        assert!((g - w).abs() < 1e-9);
    }
    assert!(p.explained_variance.windows(2).all(|w| w[0] >= w[1]));
    for axis in 0..2 {
        let mean: f64 = p.coordinates.iter().map(|c| c[axis]).sum::<f64>() / 4.0;
        assert!(mean.abs() < 1e-12);
    }
}

#[test]
fn full_rank_reconstruction() {
    let rows = toy_rows();
    let refs: Vec<&[f64]> = rows.iter().map(Vec::as_slice).collect();
    let p = pca_rows(&refs, rows.len() - 1).unwrap();
    for (i, row) in rows.iter().enumerate() {
        for j in 0..3 {
            let rebuilt: f64 = p.coordinates[i].iter().zip(&p.components).map(|(c, v)| c * v[j]).sum();
            assert!((rebuilt - (row[j] - p.mean[j])).abs() < 1e-9);
        }
    }
    assert!((p.explained_variance.iter().sum::<f64>() - 1.0).abs() < 1e-9);
}

#[test]
fn pca_degenerate_inputs() {
    let same = [0.3, 0.7];
    let p = pca_rows(&[&same, &same, &same], 2).unwrap();
    assert!(p.coordinates.iter().flatten().all(|c| c.abs() < 1e-12));
    let p = pca_rows(&[&[1.0, 0.0], &[0.0, 1.0]], 2).unwrap();
    assert!((p.coordinates[0][0] + p.coordinates[1][0]).abs() < 1e-12);
    assert!(p.coordinates[0][0].abs() > 0.5);
    assert!(p.coordinates.iter().all(|c| c[1].abs() < 1e-12));
    assert!(pca_rows(&[&same], 2).is_err());
}

#[test]
fn analytics_are_permutation_invariant() {
    let records = desk_records();
    let mut shuffled = records.clone();
    shuffled.reverse();
    shuffled.rotate_left(137);
    assert_eq!(corpus_stats(&records), corpus_stats(&shuffled));
    let (a, b) = (node_type_distributions(&records), node_type_distributions(&shuffled));
    assert_eq!(a, b);
    assert_eq!(similarity_matrix(&records).unwrap(), similarity_matrix(&shuffled).unwrap());
    assert_eq!(pca_project(&a, 2).unwrap(), pca_project(&b, 2).unwrap());
}

#[test]
fn desk_matrix_shape() {
    let records = desk_records();
    let m = similarity_matrix(&records).unwrap();
    assert_eq!(m.languages.len(), 10);
    for i in 0..10 {
        assert!((m.values[i][i] - 1.0).abs() < 1e-12);
        for j in 0..10 {
            assert_eq!(m.values[i][j], m.values[j][i]);
            assert!((0.0..=1.0).contains(&m.values[i][j]));
        }
    }
    let (a, b, _) = m.max_pair().unwrap();
    let pair = [a, b];
    assert!(pair.contains(&LanguageId::JavaScript) && pair.contains(&LanguageId::TypeScript), "{pair:?}");
    let c = |x, y| m.get(x, y).unwrap();
    assert!(c(LanguageId::C, LanguageId::Cpp) > c(LanguageId::C, LanguageId::Python));
    let python = node_type_distribution(&records, LanguageId::Python).unwrap();
    assert_eq!(python.top_type(), Some("identifier"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn distributions_are_normalized(sources in prop::collection::vec(source_strategy(), 1..6)) {
        let records: Vec<_> = sources.iter().enumerate().map(|(i, (l, s))| build(*l, &format!("g{i}"), s)).collect();
        let dists = node_type_distributions(&records);
        let dim = dists[0].vector.len();
        for d in &dists {
            prop_assert_eq!(d.vector.len(), dim);
            prop_assert!((d.vector.iter().sum::<f64>() - 1.0).abs() <= 1e-9);
            prop_assert!(d.vector.iter().all(|&x| x >= 0.0));
        }
    }
}
