//! Long-format plot data: one CSV per (metric, τ) pair with per-(solver, k)
//! mean and population standard deviation across repetitions, ready for an
//! external plotting tool.

use std::collections::BTreeMap;

use crate::csvio::fmt_sig;
use crate::runner::ResultRow;

#[derive(Debug, Clone)]
pub struct PlotFile {
    pub name: String,
    pub content: String,
}

const HEADER: &str = "solver,k,mean,stddev\n";

type Extractor = fn(&ResultRow) -> Option<f64>;

const METRICS: &[(&str, Extractor)] = &[
    ("robust_value", |r| Some(r.robust_value)),
    ("clean_value", |r| Some(r.clean_value)),
    ("test_mse", |r| r.test_mse),
    ("test_r2", |r| r.test_r2),
    ("test_accuracy", |r| r.test_accuracy),
];

pub fn emit_plot_data(rows: &[ResultRow]) -> Vec<PlotFile> {
    if rows.is_empty() {
        return vec![PlotFile {
            name: "plot_robust_value.csv".into(),
            content: HEADER.into(),
        }];
    }
    let mut taus: Vec<usize> = rows.iter().map(|r| r.tau).collect();
    taus.sort_unstable();
    taus.dedup();
    let mut files = Vec::new();
    for (metric, extract) in METRICS {
        if !rows.iter().any(|r| extract(r).is_some()) {
            continue;
        }
        for &tau in &taus {
            let mut groups: BTreeMap<(String, usize), Vec<f64>> = BTreeMap::new();
            for r in rows.iter().filter(|r| r.tau == tau) {
                if let Some(v) = extract(r) {
                    groups.entry((r.solver.clone(), r.k)).or_default().push(v);
                }
            }
            if groups.is_empty() {
                continue;
            }
            let mut content = String::from(HEADER);
            for ((solver, k), values) in groups {
                let n = values.len() as f64;
                let mean = values.iter().sum::<f64>() / n;
                let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
                content.push_str(&format!(
                    "{},{},{},{}\n",
                    solver,
                    k,
                    fmt_sig(mean),
                    fmt_sig(var.sqrt())
                ));
            }
            files.push(PlotFile {
                name: format!("plot_{metric}_tau{tau}.csv"),
                content,
            });
        }
    }
    files
}
