//! Dataset ingestion, label handling, one-vs-all reduction, test-time feature
//! deletion, splits and cross-validation folds.
//!
//! The sparse text format is one example per line, `<label> <idx>:<value> ...`,
//! with an optional header `#dim D #base {0|1}`. Indices default to 1-based on
//! disk (libsvm convention) and are 0-based in memory. Dense CSV with the
//! label/response in the last column is also accepted.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Error;
use crate::sparse::SparseVec;
use crate::Result;

/// What the labels mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    /// Labels in {+1, -1}.
    Binary,
    /// Class ids in 0..C.
    Multiclass(usize),
    /// Real-valued responses.
    Regression,
}

/// An immutable collection of (sparse features, label) pairs.
#[derive(Debug, Clone)]
pub struct Dataset {
    examples: Vec<(SparseVec, f64)>,
    dim: usize,
    task: Task,
}

/// Read-only access to training examples by index.
///
/// Implemented by [`Dataset`] and by the streaming corrupted corpus in
/// [`crate::baseline`], which regenerates examples on the fly instead of
/// materializing them.
pub trait TrainingData {
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
    fn dim(&self) -> usize;
    /// Calls `f` with example `idx`'s features and label.
    fn visit<R>(&self, idx: usize, f: impl FnOnce(&SparseVec, f64) -> R) -> R;
}

impl TrainingData for Dataset {
    fn len(&self) -> usize {
        self.examples.len()
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn visit<R>(&self, idx: usize, f: impl FnOnce(&SparseVec, f64) -> R) -> R {
        let (x, y) = &self.examples[idx];
        f(x, *y)
    }
}

/// Anything that can score a sparse example; classification callers take the
/// sign or argmax, regression callers take the value.
pub trait Scorer {
    fn score(&self, x: &SparseVec) -> Result<f64>;
}

impl Dataset {
    /// Builds a dataset, validating labels against `task` and feature indices
    /// against `dim`.
    pub fn new(examples: Vec<(SparseVec, f64)>, dim: usize, task: Task) -> Result<Self> {
        for (n, (x, y)) in examples.iter().enumerate() {
            if let Some(mx) = x.max_index() {
                if mx >= dim {
                    return Err(Error::dim(format!(
                        "example {n} has feature index {mx} >= dim {dim}"
                    )));
                }
            }
            if !y.is_finite() {
                return Err(Error::domain(format!("example {n} has non-finite label")));
            }
            match task {
                Task::Binary if *y != 1.0 && *y != -1.0 => {
                    return Err(Error::domain(format!(
                        "binary labels must be +1/-1, example {n} has {y}"
                    )));
                }
                Task::Multiclass(c) => {
                    if y.fract() != 0.0 || *y < 0.0 || *y >= c as f64 {
                        return Err(Error::domain(format!(
                            "multiclass label {y} at example {n} outside 0..{c}"
                        )));
                    }
                }
                _ => {}
            }
        }
        Ok(Dataset { examples, dim, task })
    }

    pub fn task(&self) -> Task {
        self.task
    }

    pub fn examples(&self) -> &[(SparseVec, f64)] {
        &self.examples
    }

    pub fn labels(&self) -> impl Iterator<Item = f64> + '_ {
        self.examples.iter().map(|(_, y)| *y)
    }

    /// New dataset with the selected examples (cloned), preserving dim/task.
    pub fn subset(&self, indices: &[usize]) -> Dataset {
        Dataset {
            examples: indices.iter().map(|&i| self.examples[i].clone()).collect(),
            dim: self.dim,
            task: self.task,
        }
    }

    /// Binary view for one-vs-all: label +1 for `class`, -1 otherwise.
    pub fn binary_view(&self, class: usize) -> Dataset {
        Dataset {
            examples: self
                .examples
                .iter()
                .map(|(x, y)| (x.clone(), if *y == class as f64 { 1.0 } else { -1.0 }))
                .collect(),
            dim: self.dim,
            task: Task::Binary,
        }
    }

    /// Reinterprets labels under a different task, revalidating.
    pub fn cast_task(&self, task: Task) -> Result<Dataset> {
        Dataset::new(self.examples.clone(), self.dim, task)
    }
}

fn infer_task(labels: &[f64]) -> Task {
    let all_pm1 = labels.iter().all(|&y| y == 1.0 || y == -1.0);
    if all_pm1 && !labels.is_empty() {
        return Task::Binary;
    }
    let all_class = labels.iter().all(|&y| y.fract() == 0.0 && y >= 0.0 && y <= 1e9);
    if all_class && !labels.is_empty() {
        let c = labels.iter().fold(0.0_f64, |m, &y| m.max(y)) as usize + 1;
        return Task::Multiclass(c);
    }
    Task::Regression
}

/// Loads a dataset from the sparse text format (or dense CSV).
///
/// Dimensionality is `1 + max index seen` unless a `#dim` header overrides.
/// The task is inferred from the labels: all +-1 -> binary, all nonnegative
/// integers -> multiclass, anything else -> regression.
pub fn load_sparse(path: impl AsRef<Path>) -> Result<Dataset> {
    let text = fs::read_to_string(path)?;
    parse_sparse(&text)
}

/// Parses the sparse text format from a string. See [`load_sparse`].
pub fn parse_sparse(text: &str) -> Result<Dataset> {
    let mut header_dim: Option<usize> = None;
    let mut base: u32 = 1;
    let mut examples: Vec<(SparseVec, f64)> = Vec::new();
    let mut max_idx: Option<usize> = None;
    let mut is_csv: Option<bool> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = lineno + 1;
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            parse_header(rest, lineno, &mut header_dim, &mut base)?;
            continue;
        }
        let csv = *is_csv.get_or_insert_with(|| line.contains(','));
        let (x, y) = if csv {
            parse_csv_line(line, lineno)?
        } else {
            parse_sparse_line(line, lineno, base)?
        };
        if let Some(mx) = x.max_index() {
            max_idx = Some(max_idx.map_or(mx, |m: usize| m.max(mx)));
        }
        examples.push((x, y));
    }

    let dim = header_dim.unwrap_or(max_idx.map_or(0, |m| m + 1));
    let labels: Vec<f64> = examples.iter().map(|(_, y)| *y).collect();
    let task = infer_task(&labels);
    Dataset::new(examples, dim, task)
}

fn parse_header(rest: &str, lineno: usize, dim: &mut Option<usize>, base: &mut u32) -> Result<()> {
    // Header tokens look like `dim 20000 #base 0`; '#' separators optional.
    let toks: Vec<&str> =
        rest.split(|c: char| c.is_whitespace() || c == '#').filter(|t| !t.is_empty()).collect();
    let mut i = 0;
    while i < toks.len() {
        match toks[i] {
            "dim" => {
                let v = toks.get(i + 1).ok_or_else(|| Error::Parse {
                    line: lineno,
                    message: "missing value after #dim".into(),
                })?;
                *dim = Some(v.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    message: format!("bad dim value '{v}'"),
                })?);
                i += 2;
            }
            "base" => {
                let v = toks.get(i + 1).ok_or_else(|| Error::Parse {
                    line: lineno,
                    message: "missing value after #base".into(),
                })?;
                *base = match *v {
                    "0" => 0,
                    "1" => 1,
                    other => {
                        return Err(Error::Parse {
                            line: lineno,
                            message: format!("base must be 0 or 1, got '{other}'"),
                        })
                    }
                };
                i += 2;
            }
            other => {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("unknown header token '{other}'"),
                })
            }
        }
    }
    Ok(())
}

fn parse_sparse_line(line: &str, lineno: usize, base: u32) -> Result<(SparseVec, f64)> {
    let mut parts = line.split_whitespace();
    let label_tok = parts.next().unwrap();
    let y: f64 = label_tok.parse().map_err(|_| Error::Parse {
        line: lineno,
        message: format!("bad label '{label_tok}'"),
    })?;
    if !y.is_finite() {
        return Err(Error::Parse { line: lineno, message: "non-finite label".into() });
    }
    let mut pairs = Vec::new();
    for tok in parts {
        let (is, vs) = tok.split_once(':').ok_or_else(|| Error::Parse {
            line: lineno,
            message: format!("expected idx:value, got '{tok}'"),
        })?;
        let idx: u32 = is.parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("bad feature index '{is}'"),
        })?;
        if idx < base {
            return Err(Error::Parse {
                line: lineno,
                message: format!("index {idx} below base {base}"),
            });
        }
        let val: f64 = vs.parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("bad feature value '{vs}'"),
        })?;
        if !val.is_finite() {
            return Err(Error::Parse { line: lineno, message: "non-finite feature value".into() });
        }
        pairs.push((idx - base, val));
    }
    let x = SparseVec::from_pairs(pairs)
        .map_err(|e| Error::Parse { line: lineno, message: e.to_string() })?;
    Ok((x, y))
}

fn parse_csv_line(line: &str, lineno: usize) -> Result<(SparseVec, f64)> {
    let fields: Vec<&str> = line.split(',').collect();
    if fields.len() < 2 {
        return Err(Error::Parse { line: lineno, message: "csv line needs >= 2 fields".into() });
    }
    let mut vals = Vec::with_capacity(fields.len());
    for f in &fields {
        let v: f64 = f.trim().parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("bad csv value '{f}'"),
        })?;
        if !v.is_finite() {
            return Err(Error::Parse { line: lineno, message: "non-finite csv value".into() });
        }
        vals.push(v);
    }
    let y = vals.pop().unwrap();
    Ok((SparseVec::from_dense(&vals), y))
}

/// Writes a dataset in the sparse text format with a `#dim`/`#base 0` header.
/// Values keep 17 significant digits so a save/load round trip is exact.
pub fn save_sparse(data: &Dataset, path: impl AsRef<Path>) -> Result<()> {
    let mut out = String::new();
    writeln!(out, "#dim {} #base 0", data.dim).unwrap();
    for (x, y) in data.examples() {
        write!(out, "{}", fmt_g17(*y)).unwrap();
        for (d, v) in x.iter() {
            write!(out, " {}:{}", d, fmt_g17(v)).unwrap();
        }
        out.push('\n');
    }
    fs::write(path, out)?;
    Ok(())
}

/// Formats with 17 significant digits (exact f64 round trip).
pub fn fmt_g17(v: f64) -> String {
    let s = format!("{v:.16e}");
    // Trim the exponent form for integral small values to keep files readable.
    if v.fract() == 0.0 && v.abs() < 1e15 {
        format!("{v}")
    } else {
        s
    }
}

/// Test-time "nightmare" deletion: each stored coordinate of each example is
/// zeroed independently with probability `fraction`. Surviving features are
/// *not* rescaled; this is deliberate and distinct from the unbiased training
/// dropout model.
pub fn delete_features(data: &Dataset, fraction: f64, seed: u64) -> Result<Dataset> {
    if !(0.0..=1.0).contains(&fraction) {
        return Err(Error::invalid(format!("deletion fraction {fraction} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let examples = data
        .examples
        .iter()
        .map(|(x, y)| {
            let kept: Vec<(u32, f64)> = x
                .iter()
                .filter(|_| rng.random::<f64>() >= fraction)
                .map(|(d, v)| (d as u32, v))
                .collect();
            let (idx, val) = kept.into_iter().unzip();
            (SparseVec::from_sorted_unchecked(idx, val), *y)
        })
        .collect();
    Ok(Dataset { examples, dim: data.dim, task: data.task })
}

/// K-fold split: returns `(train indices, validation indices)` per fold.
/// Stratified by class for classification tasks; falls back to an
/// unstratified split (with a warning) when some class has fewer than `k`
/// members, or for regression.
pub fn kfold(data: &Dataset, k: usize, seed: u64) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let n = data.len();
    if k < 2 {
        return Err(Error::invalid(format!("k-fold needs k >= 2, got {k}")));
    }
    if n < k {
        return Err(Error::invalid(format!("k-fold needs at least k={k} examples, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let groups: Vec<Vec<usize>> = match data.task {
        Task::Binary | Task::Multiclass(_) => {
            let mut by_class: Vec<(f64, Vec<usize>)> = Vec::new();
            for (i, y) in data.labels().enumerate() {
                match by_class.iter_mut().find(|(c, _)| *c == y) {
                    Some((_, v)) => v.push(i),
                    None => by_class.push((y, vec![i])),
                }
            }
            by_class.sort_by(|a, b| a.0.total_cmp(&b.0));
            if by_class.iter().any(|(_, v)| v.len() < k) {
                log::warn!("a class has fewer than {k} members; using unstratified folds");
                vec![(0..n).collect()]
            } else {
                by_class.into_iter().map(|(_, v)| v).collect()
            }
        }
        Task::Regression => vec![(0..n).collect()],
    };

    // Round-robin assignment of shuffled per-group indices keeps fold class
    // counts within one of each other.
    let mut fold_of = vec![0usize; n];
    let mut next_fold = 0usize;
    for mut group in groups {
        group.shuffle(&mut rng);
        for i in group {
            fold_of[i] = next_fold;
            next_fold = (next_fold + 1) % k;
        }
    }
    let mut folds = Vec::with_capacity(k);
    for f in 0..k {
        let val: Vec<usize> = (0..n).filter(|&i| fold_of[i] == f).collect();
        let train: Vec<usize> = (0..n).filter(|&i| fold_of[i] != f).collect();
        folds.push((train, val));
    }
    Ok(folds)
}

/// Single stratified holdout split: `(train indices, validation indices)`.
pub fn holdout_split(data: &Dataset, val_fraction: f64, seed: u64) -> Result<(Vec<usize>, Vec<usize>)> {
    if !(0.0..1.0).contains(&val_fraction) || val_fraction <= 0.0 {
        return Err(Error::invalid(format!("validation fraction {val_fraction} outside (0, 1)")));
    }
    let k = (1.0 / val_fraction).round().max(2.0) as usize;
    let folds = kfold(data, k.min(data.len()), seed)?;
    Ok(folds.into_iter().next().unwrap())
}

/// Evaluation report for [`metrics`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MetricReport {
    /// Fraction of misclassified examples.
    Classification { error_rate: f64 },
    /// Predictive R-squared: `1 - SS_res / SS_tot` on the evaluation set.
    Regression { r_squared: f64 },
}

impl MetricReport {
    pub fn value(&self) -> f64 {
        match self {
            MetricReport::Classification { error_rate } => *error_rate,
            MetricReport::Regression { r_squared } => *r_squared,
        }
    }
}

/// Computes the task metric. For `Binary`, predictions are raw scores
/// (sign decides, score 0 counts as +1); for `Multiclass`, predictions are
/// class ids; for `Regression`, real values. Zero variance in the regression
/// truths makes R-squared undefined and is reported as an error.
pub fn metrics(predictions: &[f64], truths: &[f64], task: Task) -> Result<MetricReport> {
    if predictions.len() != truths.len() {
        return Err(Error::dim(format!(
            "{} predictions vs {} truths",
            predictions.len(),
            truths.len()
        )));
    }
    if predictions.is_empty() {
        return Err(Error::EmptyDataset);
    }
    match task {
        Task::Binary => {
            let wrong = predictions
                .iter()
                .zip(truths.iter())
                .filter(|(&p, &y)| (if p >= 0.0 { 1.0 } else { -1.0 }) != y)
                .count();
            Ok(MetricReport::Classification { error_rate: wrong as f64 / truths.len() as f64 })
        }
        Task::Multiclass(_) => {
            let wrong = predictions.iter().zip(truths.iter()).filter(|(&p, &y)| p != y).count();
            Ok(MetricReport::Classification { error_rate: wrong as f64 / truths.len() as f64 })
        }
        Task::Regression => {
            let n = truths.len() as f64;
            let mean = truths.iter().sum::<f64>() / n;
            let ss_tot: f64 = truths.iter().map(|y| (y - mean) * (y - mean)).sum();
            if ss_tot == 0.0 {
                return Err(Error::Undefined("R^2 with zero-variance truths".into()));
            }
            let ss_res: f64 =
                predictions.iter().zip(truths.iter()).map(|(p, y)| (y - p) * (y - p)).sum();
            Ok(MetricReport::Regression { r_squared: 1.0 - ss_res / ss_tot })
        }
    }
}

/// One binary model per class, trained independently.
#[derive(Debug, Clone)]
pub struct OneVsAllModel<M> {
    pub models: Vec<M>,
}

impl<M> OneVsAllModel<M> {
    pub fn classes(&self) -> usize {
        self.models.len()
    }
}

/// Trains one binary model per class in parallel. `train_one` receives the
/// relabeled (+1 vs -1) dataset and the class id. A class with zero positive
/// examples is still trained (on all-negative labels) with a warning.
pub fn one_vs_all_train<M, F>(data: &Dataset, train_one: F) -> Result<OneVsAllModel<M>>
where
    M: Send,
    F: Fn(&Dataset, usize) -> Result<M> + Sync,
{
    let c = match data.task {
        Task::Multiclass(c) => c,
        _ => return Err(Error::invalid("one-vs-all needs a multiclass dataset".into())),
    };
    if c < 2 {
        return Err(Error::invalid(format!("one-vs-all needs >= 2 classes, got {c}")));
    }
    for class in 0..c {
        if !data.labels().any(|y| y == class as f64) {
            log::warn!("class {class} has no examples; its model trains on all-negative labels");
        }
    }
    let models: Result<Vec<M>> = (0..c)
        .into_par_iter()
        .map(|class| train_one(&data.binary_view(class), class))
        .collect();
    Ok(OneVsAllModel { models: models? })
}

/// Argmax over per-class raw scores; exact ties break toward the lowest id.
pub fn one_vs_all_predict<M: Scorer>(m: &OneVsAllModel<M>, x: &SparseVec) -> Result<usize> {
    let mut best = 0usize;
    let mut best_score = f64::NEG_INFINITY;
    for (class, model) in m.models.iter().enumerate() {
        let s = model.score(x)?;
        if s > best_score {
            best = class;
            best_score = s;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_example_line() {
        let ds = parse_sparse("+1 3:0.5 7:1.0\n").unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds.dim(), 7); // 1-based on disk -> indices 2 and 6
        let (x, y) = &ds.examples()[0];
        assert_eq!(*y, 1.0);
        assert_eq!(x.iter().collect::<Vec<_>>(), vec![(2, 0.5), (6, 1.0)]);
    }

    #[test]
    fn empty_file_is_an_empty_dataset() {
        let ds = parse_sparse("").unwrap();
        assert_eq!(ds.len(), 0);
        assert_eq!(ds.dim(), 0);
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = parse_sparse("+1 3:0.5\n-1 oops\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn header_controls_dim_and_base() {
        let ds = parse_sparse("#dim 10 #base 0\n+1 0:2.0 9:1.0\n").unwrap();
        assert_eq!(ds.dim(), 10);
        assert_eq!(ds.examples()[0].0.get(0), 2.0);
    }

    #[test]
    fn csv_lines_accepted() {
        let ds = parse_sparse("1.0,0.0,2.5,-1\n0.0,1.0,0.0,1\n").unwrap();
        assert_eq!(ds.dim(), 3);
        assert_eq!(ds.task(), Task::Binary);
        assert_eq!(ds.examples()[0].0.get(2), 2.5);
    }

    #[test]
    fn task_inference() {
        assert_eq!(parse_sparse("+1 1:1\n-1 1:2\n").unwrap().task(), Task::Binary);
        assert_eq!(parse_sparse("0 1:1\n2 1:2\n").unwrap().task(), Task::Multiclass(3));
        assert_eq!(parse_sparse("0.5 1:1\n1.25 1:2\n").unwrap().task(), Task::Regression);
    }

    #[test]
    fn save_load_round_trip_is_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ds.txt");
        let ds = parse_sparse("0.123456789012345678 1:1e-13 5:3.14159265358979312\n-2 2:7\n")
            .unwrap();
        save_sparse(&ds, &path).unwrap();
        let back = load_sparse(&path).unwrap();
        assert_eq!(back.dim(), ds.dim());
        assert_eq!(back.examples(), ds.examples());
    }

    #[test]
    fn deletion_edge_fractions() {
        let ds = parse_sparse("+1 1:1 2:2\n-1 1:3\n").unwrap();
        let id = delete_features(&ds, 0.0, 1).unwrap();
        assert_eq!(id.examples(), ds.examples());
        let gone = delete_features(&ds, 1.0, 1).unwrap();
        assert!(gone.examples().iter().all(|(x, _)| x.is_empty()));
        assert!(delete_features(&ds, 1.5, 1).is_err());
    }

    #[test]
    fn kfold_partition_properties() {
        let text: String = (0..10).map(|i| format!("{} 1:{}\n", if i % 2 == 0 { 1 } else { -1 }, i)).collect();
        let ds = parse_sparse(&text).unwrap();
        let folds = kfold(&ds, 5, 9).unwrap();
        assert_eq!(folds.len(), 5);
        let mut seen = vec![false; 10];
        for (train, val) in &folds {
            assert_eq!(val.len(), 2);
            assert_eq!(train.len(), 8);
            for &i in val {
                assert!(!seen[i], "index {i} in two validation folds");
                seen[i] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn kfold_stratification_within_one() {
        // 3 classes of sizes 9 / 6 / 6, k = 3: per-fold class counts within 1.
        let mut text = String::new();
        for i in 0..21 {
            let class = if i < 9 { 0 } else if i < 15 { 1 } else { 2 };
            text.push_str(&format!("{class} 1:{i}\n"));
        }
        let ds = parse_sparse(&text).unwrap();
        let folds = kfold(&ds, 3, 4).unwrap();
        for (_, val) in &folds {
            let counts = [0, 1, 2].map(|c| {
                val.iter().filter(|&&i| ds.examples()[i].1 == c as f64).count() as i64
            });
            assert!((counts[0] - 3).abs() <= 1);
            assert!((counts[1] - 2).abs() <= 1);
            assert!((counts[2] - 2).abs() <= 1);
        }
    }

    #[test]
    fn metric_trivial_cases() {
        let r = metrics(&[1.0, 2.0], &[1.0, 2.0], Task::Regression).unwrap();
        assert_eq!(r, MetricReport::Regression { r_squared: 1.0 });
        // Constant predictor at the mean: R^2 = 0.
        let r = metrics(&[1.5, 1.5], &[1.0, 2.0], Task::Regression).unwrap();
        assert_eq!(r, MetricReport::Regression { r_squared: 0.0 });
        let preds = [1.0, 1.0, 1.0, -1.0, -1.0, -1.0, 1.0, 1.0, 1.0, 1.0];
        let truth = [1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, -1.0];
        let r = metrics(&preds, &truth, Task::Binary).unwrap();
        assert_eq!(r, MetricReport::Classification { error_rate: 0.3 });
        assert!(metrics(&[1.0], &[1.0], Task::Regression).is_err()); // zero variance
    }

    struct FixedScore(f64);

    impl Scorer for FixedScore {
        fn score(&self, _x: &SparseVec) -> Result<f64> {
            Ok(self.0)
        }
    }

    #[test]
    fn ova_argmax_and_tie_break() {
        let x = SparseVec::empty();
        let m = OneVsAllModel { models: vec![FixedScore(0.2), FixedScore(0.9), FixedScore(-1.0)] };
        assert_eq!(one_vs_all_predict(&m, &x).unwrap(), 1);
        let m = OneVsAllModel { models: vec![FixedScore(0.5), FixedScore(0.5)] };
        assert_eq!(one_vs_all_predict(&m, &x).unwrap(), 0);
    }
}
