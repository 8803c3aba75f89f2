use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, ensure, Context, Result};
use ccnet::encoding::encode_value;
use ccnet::experiments::{
    cell_means, csv_row, export_csv, optimal_cell, parse_csv, render_map, run_experiment,
    sweep as run_sweep, CSV_HEADER,
};
use ccnet::patterns::{generate_box, generate_spiral, load_pattern};
use ccnet::{Pattern, Scheme, SweepTable};

/// Band the optimal n/N is expected to fall in for small radii.
const RATIO_BAND: (f64, f64) = (0.20, 0.30);
const BAND_RADII: [u32; 2] = [1, 2];

fn scheme(name: &str) -> Result<Scheme> {
    Ok(name.parse()?)
}

fn load(source: &str, size: usize) -> Result<Pattern> {
    let grid = match source {
        "spiral" => generate_spiral(size)?,
        "box" => generate_box(size)?,
        path => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read pattern file `{path}`"))?;
            load_pattern(&text).with_context(|| format!("in pattern file `{path}`"))?
        }
    };
    let id = Path::new(source)
        .file_stem()
        .map_or_else(|| source.to_string(), |s| s.to_string_lossy().into_owned());
    Ok(Pattern::new(id, grid))
}

fn parse_list<T: std::str::FromStr>(flag: &str, items: &[String]) -> Result<Vec<T>> {
    let items: Vec<&str> = items
        .iter()
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .collect();
    ensure!(!items.is_empty(), "--{flag} needs at least one value");
    items
        .into_iter()
        .map(|s| {
            s.parse()
                .ok()
                .with_context(|| format!("--{flag}: `{s}` is not a valid value"))
        })
        .collect()
}

pub fn encode(value: usize, range: usize, scheme_name: &str) -> Result<String> {
    let cw = encode_value(value, range, scheme(scheme_name)?)?;
    Ok(format!("{cw}\n"))
}

pub fn classify(
    source: &str,
    size: usize,
    scheme_name: &str,
    n: usize,
    r: u32,
    seed: u64,
) -> Result<String> {
    let pattern = load(source, size)?;
    let exp = run_experiment(&pattern, scheme(scheme_name)?, n, r, seed)?;
    let mut out = render_map(&exp.predicted, &pattern.grid)?;
    out.push('\n');
    writeln!(out, "{}", CSV_HEADER.join(","))?;
    out.push_str(&csv_row(&exp.result));
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
pub fn sweep(
    source: &str,
    size: usize,
    scheme_name: &str,
    ns: &[String],
    rs: &[String],
    seed: u64,
    seed_count: u64,
    out: &Path,
) -> Result<String> {
    let ns: Vec<usize> = parse_list("ns", ns)?;
    let rs: Vec<u32> = parse_list("rs", rs)?;
    ensure!(seed_count > 0, "--seeds must be at least 1");
    let seeds: Vec<u64> = (0..seed_count).map(|i| seed.wrapping_add(i)).collect();
    let pattern = load(source, size)?;
    let table = run_sweep(&pattern, scheme(scheme_name)?, &ns, &rs, &seeds)?;
    std::fs::write(out, export_csv(&table))
        .with_context(|| format!("cannot write `{}`", out.display()))?;

    let mut text = format!("wrote {} rows to {}\n", table.rows.len(), out.display());
    text.push_str(&mean_table(&table)?);
    Ok(text)
}

/// Mean error with n as rows (descending) and r as columns.
fn mean_table(table: &SweepTable) -> Result<String> {
    let means = cell_means(table)?;
    let mut rs: Vec<u32> = means.iter().map(|c| c.r).collect();
    rs.dedup();
    let mut ns: Vec<usize> = means.iter().map(|c| c.n).collect();
    ns.sort_unstable_by(|a, b| b.cmp(a));
    ns.dedup();

    let mut out = String::from("mean error\n     n");
    for r in &rs {
        write!(out, "  {:>8}", format!("r={r}"))?;
    }
    out.push('\n');
    for n in ns {
        write!(out, "{n:>6}")?;
        for &r in &rs {
            match means.iter().find(|c| c.n == n && c.r == r) {
                Some(c) => write!(out, "  {:>8.6}", c.mean_error())?,
                None => write!(out, "  {:>8}", "-")?,
            }
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn report(path: &Path) -> Result<String> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read `{}`", path.display()))?;
    let table = parse_csv(&text).with_context(|| format!("in `{}`", path.display()))?;
    if table.rows.is_empty() {
        bail!("`{}` has no result rows", path.display());
    }

    // One section per (pattern, scheme), in order of first appearance.
    let mut groups: Vec<((String, Scheme), SweepTable)> = Vec::new();
    for row in table.rows {
        let key = (row.pattern_id.clone(), row.scheme);
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, t)) => t.rows.push(row),
            None => groups.push((key, SweepTable { rows: vec![row] })),
        }
    }

    let mut out = String::new();
    for ((pattern, scheme), group) in &groups {
        let total = group.rows[0].total();
        writeln!(out, "pattern {pattern}, scheme {scheme}, N = {total}")?;
        out.push_str(&mean_table(group)?);
        out.push_str("optimal n/N\n");
        let mut rs: Vec<u32> = group.rows.iter().map(|r| r.r).collect();
        rs.sort_unstable();
        rs.dedup();
        for r in rs {
            let best = optimal_cell(group, r)?;
            let ratio = best.ratio();
            writeln!(
                out,
                "  r={r}  n*={}  n*/N={ratio:.4}  mean error={:.6}",
                best.n,
                best.mean_error()
            )?;
            let (lo, hi) = RATIO_BAND;
            if BAND_RADII.contains(&r) && !(lo..=hi).contains(&ratio) {
                eprintln!(
                    "WARN {pattern}/{scheme} r={r}: optimal n/N {ratio:.4} outside [{lo:.2}, {hi:.2}]"
                );
            }
        }
    }
    Ok(out)
}
