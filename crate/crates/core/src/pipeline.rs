//! Batch invariants and snark count tables.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::coloring::chromatic_index;
use crate::connectivity::{connectivity_class, cyclic_edge_connectivity, vertex_connectivity, ConnectivityClass};
use crate::error::PipelineError;
use crate::format::parse_graph6;
use crate::generation::{GenSpec, Generator};
use crate::graph::CubicGraph;
use crate::oddness::{oddness, OddnessMode};
use crate::symmetry::canonical_form;

pub const INVARIANTS_HEADER: &str = "key,order,girth,chi_prime,oddness,kappa,cyclic_lambda,aut_order";
pub const TABLE_HEADER: &str = "order,all,oddness4_conn2,oddness4_conn3,oddness4_total";

/// One CSV row of `invariants`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantRecord {
    pub key: String,
    pub order: usize,
    pub girth: usize,
    pub chi_prime: usize,
    /// `None` for graphs with a bridge, where oddness is undefined.
    pub oddness: Option<usize>,
    pub kappa: usize,
    /// `None` when no cycle-separating cut exists.
    pub cyclic_lambda: Option<usize>,
    pub aut_order: u64,
}

impl InvariantRecord {
    pub fn csv_row(&self) -> String {
        let opt = |v: Option<usize>| v.map_or_else(|| "none".to_string(), |x| x.to_string());
        format!(
            "{},{},{},{},{},{},{},{}",
            self.key,
            self.order,
            self.girth,
            self.chi_prime,
            opt(self.oddness),
            self.kappa,
            opt(self.cyclic_lambda),
            self.aut_order
        )
    }
}

pub fn compute_invariants(g: &CubicGraph, mode: OddnessMode) -> Result<InvariantRecord, PipelineError> {
    let cf = canonical_form(g);
    let chi_prime = chromatic_index(g);
    let oddness = if !g.is_bridgeless() {
        None
    } else if chi_prime == 3 {
        Some(0)
    } else {
        Some(oddness(g, mode)?.value)
    };
    let cyclic_lambda = if g.is_connected() {
        cyclic_edge_connectivity(g, None)?.value()
    } else {
        None
    };
    Ok(InvariantRecord {
        key: cf.key_str().to_string(),
        order: g.order(),
        girth: g.girth(),
        chi_prime,
        oddness,
        kappa: vertex_connectivity(g),
        cyclic_lambda,
        aut_order: cf.automorphism_order,
    })
}

/// Invariants for every graph, in input order, using `workers` threads
/// (0 = all CPUs).
pub fn compute_all_invariants(
    graphs: &[CubicGraph],
    mode: OddnessMode,
    workers: usize,
) -> Result<Vec<InvariantRecord>, PipelineError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    pool.install(|| graphs.par_iter().map(|g| compute_invariants(g, mode)).collect())
}

pub fn invariants_csv(records: &[InvariantRecord]) -> String {
    let mut out = String::from(INVARIANTS_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

/// Parses one graph6 graph per non-empty line. Errors carry the 1-based
/// line number.
pub fn read_graph6_lines(text: &str) -> Result<Vec<CubicGraph>, PipelineError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.as_bytes()).map_err(|source| PipelineError::Parse { line: i + 1, source }))
        .collect()
}

/// Graph6 lines, newline-terminated.
pub fn graph6_lines<'a>(graphs: impl IntoIterator<Item = &'a CubicGraph>) -> String {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&crate::format::encode_graph6(g));
        out.push('\n');
    }
    out
}

/// Snark tallies for one order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CountRow {
    pub order: usize,
    /// All 2-connected snarks with the girth bound.
    pub all: usize,
    pub oddness4_conn2: usize,
    pub oddness4_conn3: usize,
    /// Oddness-4 snarks of any connectivity class.
    pub oddness4_total: usize,
    /// Snarks with oddness 6 or more (not a table column).
    pub higher_oddness: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub min_girth: usize,
    pub rows: Vec<CountRow>,
}

impl CountTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(TABLE_HEADER);
        out.push('\n');
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{}",
                r.order, r.all, r.oddness4_conn2, r.oddness4_conn3, r.oddness4_total
            )
            .unwrap();
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "2-connected snarks with girth at least {}", self.min_girth).unwrap();
        writeln!(out, "{:>5} {:>10}   {:>6} {:>6} {:>6}", "", "", "Oddness 4", "", "").unwrap();
        writeln!(out, "{:>5} {:>10} {:>7} {:>7} {:>7}", "Order", "All", "Conn 2", "Conn 3", "Total").unwrap();
        for r in &self.rows {
            writeln!(
                out,
                "{:>5} {:>10} {:>7} {:>7} {:>7}",
                r.order, r.all, r.oddness4_conn2, r.oddness4_conn3, r.oddness4_total
            )
            .unwrap();
        }
        out
    }
}

/// Generates the snarks of one order and tallies oddness and connectivity.
pub fn count_snarks(
    generator: &mut Generator,
    order: usize,
    min_girth: usize,
    mode: OddnessMode,
) -> Result<CountRow, PipelineError> {
    let snarks = generator.generate(&GenSpec::snarks(order, min_girth))?;
    let mut row = CountRow {
        order,
        all: snarks.len(),
        ..Default::default()
    };
    for g in &snarks {
        let value = oddness(g, mode)?.value;
        if value == 4 {
            row.oddness4_total += 1;
            match connectivity_class(g)? {
                ConnectivityClass::Two => row.oddness4_conn2 += 1,
                ConnectivityClass::Three => row.oddness4_conn3 += 1,
                ConnectivityClass::FourPlus => {}
            }
        } else if value > 4 {
            row.higher_oddness += 1;
        }
    }
    Ok(row)
}

/// Rows for the even orders from 10 up to `max_order`.
pub fn count_table(
    generator: &mut Generator,
    min_girth: usize,
    max_order: usize,
    mode: OddnessMode,
) -> Result<CountTable, PipelineError> {
    let rows = (10..=max_order)
        .step_by(2)
        .map(|n| count_snarks(generator, n, min_girth, mode))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CountTable { min_girth, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generation::GenConfig;
    use crate::graph::named::*;

    #[test]
    fn petersen_record() {
        let r = compute_invariants(&petersen(), OddnessMode::CrossChecked).unwrap();
        assert_eq!(
            (r.order, r.girth, r.chi_prime, r.oddness, r.kappa, r.cyclic_lambda, r.aut_order),
            (10, 5, 4, Some(2), 3, Some(5), 120)
        );
    }

    #[test]
    fn k4_record() {
        let r = compute_invariants(&k4(), OddnessMode::Fast).unwrap();
        assert_eq!(r.key, "C~");
        assert_eq!((r.girth, r.chi_prime, r.oddness), (3, 3, Some(0)));
        assert_eq!(r.csv_row(), "C~,4,3,3,0,3,none,24");
    }

    #[test]
    fn bridged_record_has_no_oddness() {
        let r = compute_invariants(&bridged_k4_pair(), OddnessMode::CrossChecked).unwrap();
        assert_eq!(r.oddness, None);
        assert_eq!(r.chi_prime, 4);
        assert_eq!(r.kappa, 1);
    }

    #[test]
    fn parse_errors_report_the_line() {
        let text = "C~\n\nIheA@GUAo\nCh\n";
        match read_graph6_lines(text) {
            Err(PipelineError::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
        assert_eq!(read_graph6_lines("C~\nIheA@GUAo\n").unwrap().len(), 2);
    }

    #[test]
    fn small_table() {
        let mut gen = Generator::new(GenConfig::default().with_workers(2));
        let t = count_table(&mut gen, 5, 14, OddnessMode::CrossChecked).unwrap();
        assert_eq!(
            t.to_csv(),
            "order,all,oddness4_conn2,oddness4_conn3,oddness4_total\n10,1,0,0,0\n12,0,0,0,0\n14,0,0,0,0\n"
        );
        assert!(t.to_text().contains("Order"));
    }
}
