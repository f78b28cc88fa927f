use std::fmt;
use std::fs;
use std::path::Path;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use sandpile_core::engine::{config_order, identity, DEFAULT_ENUM_CAP};
use sandpile_core::formulas::{block_triple, block_tridiag_det, closed_form_count, lu_wu_count, Form, Parity};
use sandpile_core::graph::{board_graph, grid_sandpile, p_graph, BoardKind};
use sandpile_core::linalg::det;
use sandpile_core::symmetry::{enumerate_symmetric_recurrents, klein_action, symmetrized_laplacian};
use sandpile_core::tilings::{a_seq, count_matchings, enumerate_matchings, pn_diagonal_config, pn_distance_config, pn_embed};
use sandpile_core::{Config, Error, SandpileGraph};
use serde_json::{json, Value};

use crate::json::{big, big_u, config_json, matching_json};
use crate::pgm::write_pgm;
use crate::report::ReportRow;

pub const CAP_VAR: &str = "SANDPILE_ENUM_CAP";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    SizeCap(String),
    Failed(String),
    /// Verification ran but some rows disagree; the payload is still printed.
    Disagree(Value),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) | CliError::Disagree(_) => 1,
            CliError::Usage(_) => 2,
            CliError::SizeCap(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "usage: {s}"),
            CliError::SizeCap(s) => write!(f, "size cap: {s}"),
            CliError::Failed(s) => f.write_str(s),
            CliError::Disagree(_) => f.write_str("methods disagree"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } | Error::TooLarge(_) => CliError::SizeCap(e.to_string()),
            Error::InvalidArgument(_) | Error::DimensionMismatch { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

type Out = Result<Value, CliError>;

/// Enumeration cap from the environment, or the library default.
pub fn enum_cap() -> Result<u64, CliError> {
    match std::env::var(CAP_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| CliError::Usage(format!("{CAP_VAR} must be a non-negative integer"))),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn positive(name: &str, v: usize) -> Result<(), CliError> {
    if v == 0 {
        return Err(CliError::Usage(format!("{name} must be at least 1")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Det,
    Enumerate,
    Product,
    Chebyshev,
    Tilings,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Board {
    Plain,
    Mobius,
    MobiusWeighted,
    TwoWeighted,
}

impl From<Board> for BoardKind {
    fn from(b: Board) -> BoardKind {
        match b {
            Board::Plain => BoardKind::Plain,
            Board::Mobius => BoardKind::Mobius,
            Board::MobiusWeighted => BoardKind::MobiusWeighted,
            Board::TwoWeighted => BoardKind::TwoWeighted,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StartConfig {
    AllOnes,
    AllTwos,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pgm,
    Json,
}

/// Parity class and quotient size of a rows x cols grid. Odd x even
/// grids are handled through their transpose.
pub fn symmetric_class(rows: usize, cols: usize) -> (Parity, usize, usize) {
    match (rows % 2, cols % 2) {
        (0, 0) => (Parity::EvenEven, rows / 2, cols / 2),
        (0, _) => (Parity::EvenOdd, rows / 2, cols.div_ceil(2)),
        (_, 0) => (Parity::EvenOdd, cols / 2, rows.div_ceil(2)),
        _ => (Parity::OddOdd, rows.div_ceil(2), cols.div_ceil(2)),
    }
}

fn klein_det(rows: usize, cols: usize) -> Result<BigInt, Error> {
    let g = grid_sandpile(rows, cols)?;
    det(&symmetrized_laplacian(&g, &klein_action(rows, cols)?))
}

fn board_count(kind: BoardKind, rows: usize, cols: usize) -> Result<BigInt, Error> {
    Ok(count_matchings(&board_graph(kind, rows, cols)?)?.into())
}

/// Board whose weighted tilings count the symmetric recurrents.
fn tiling_board(parity: Parity, m: usize, n: usize) -> (BoardKind, usize, usize) {
    match parity {
        Parity::EvenEven => (BoardKind::Plain, 2 * m, 2 * n),
        Parity::EvenOdd => (BoardKind::MobiusWeighted, 2 * m, 2 * n),
        Parity::OddOdd => (BoardKind::TwoWeighted, 2 * m, 2 * n),
    }
}

fn symmetric_value(method: Method, rows: usize, cols: usize, cap: u64) -> Result<BigInt, Error> {
    let (parity, m, n) = symmetric_class(rows, cols);
    match method {
        Method::Det | Method::All => klein_det(rows, cols),
        Method::Enumerate => {
            let g = grid_sandpile(rows, cols)?;
            Ok(enumerate_symmetric_recurrents(&g, &klein_action(rows, cols)?, cap)?.len().into())
        }
        Method::Product => closed_form_count(parity, m, n, Form::Product),
        Method::Chebyshev => closed_form_count(parity, m, n, Form::Chebyshev),
        Method::Tilings => {
            let (kind, r, c) = tiling_board(parity, m, n);
            board_count(kind, r, c)
        }
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Det => "det",
        Method::Enumerate => "enumerate",
        Method::Product => "product",
        Method::Chebyshev => "chebyshev",
        Method::Tilings => "tilings",
        Method::All => "all",
    }
}

pub fn count_symmetric(rows: usize, cols: usize, method: Method) -> Out {
    positive("rows", rows)?;
    positive("cols", cols)?;
    let cap = enum_cap()?;
    if method != Method::All {
        let v = symmetric_value(method, rows, cols, cap)?;
        return Ok(json!({ "rows": rows, "cols": cols, "method": method_name(method), "value": big(&v) }));
    }
    let (parity, m, n) = symmetric_class(rows, cols);
    let mut row = ReportRow::new(m, n, parity.name());
    // The determinant is authoritative; other paths may fail on their own.
    row.record("det", Ok::<_, Error>(symmetric_value(Method::Det, rows, cols, cap)?));
    for method in [Method::Enumerate, Method::Product, Method::Chebyshev, Method::Tilings] {
        row.record(method_name(method), symmetric_value(method, rows, cols, cap));
    }
    let out = json!({ "rows": rows, "cols": cols, "method": "all", "report": row });
    if row.agree {
        Ok(out)
    } else {
        Err(CliError::Disagree(out))
    }
}

fn board_name(b: Board) -> &'static str {
    match b {
        Board::Plain => "plain",
        Board::Mobius => "mobius",
        Board::MobiusWeighted => "mobius-weighted",
        Board::TwoWeighted => "two-weighted",
    }
}

pub fn count_tilings(rows: usize, cols: usize, board: Board, enumerate: bool) -> Out {
    positive("rows", rows)?;
    positive("cols", cols)?;
    let b = board_graph(board.into(), rows, cols)?;
    let count = count_matchings(&b)?;
    let mut out = json!({ "board": board_name(board), "rows": rows, "cols": cols, "count": big_u(&count) });
    if enumerate {
        let ms = enumerate_matchings(&b, enum_cap()?)?;
        let sum = ms.iter().map(|m| &m.weight).sum();
        out["census"] = json!({
            "count": ms.len(),
            "weight_sum": big_u(&sum),
            "matchings": ms.iter().map(|m| json!({ "edges": matching_json(m), "weight": big_u(&m.weight) })).collect::<Vec<_>>(),
        });
        if sum != count {
            return Err(CliError::Disagree(out));
        }
    }
    Ok(out)
}

fn constant_order(g: &SandpileGraph, k: u64) -> Result<BigInt, Error> {
    config_order(g, &vec![BigInt::from(k); g.vertex_count()])
}

pub fn order(rows: usize, cols: usize, start: StartConfig) -> Out {
    positive("rows", rows)?;
    positive("cols", cols)?;
    let g = grid_sandpile(rows, cols)?;
    let twos = constant_order(&g, 2)?;
    Ok(match start {
        StartConfig::AllTwos => json!({ "rows": rows, "cols": cols, "config": "all-twos", "order": big(&twos) }),
        StartConfig::AllOnes => {
            let ones = constant_order(&g, 1)?;
            json!({
                "rows": rows,
                "cols": cols,
                "config": "all-ones",
                "order": big(&ones),
                "ratio_to_all_twos": big(&(&ones / &twos)),
            })
        }
    })
}

pub fn identity_config(rows: usize, cols: usize) -> Result<Config, CliError> {
    positive("rows", rows)?;
    positive("cols", cols)?;
    Ok(identity(&grid_sandpile(rows, cols)?))
}

pub fn render_identity(rows: usize, cols: usize, format: Format) -> Result<String, CliError> {
    let e = identity_config(rows, cols)?;
    Ok(match format {
        Format::Pgm => write_pgm(rows, cols, &e),
        Format::Json => {
            let g = grid_sandpile(rows, cols)?;
            let mut s = serde_json::to_string(&config_json(&g, &e)["rows"]).expect("json");
            s.push('\n');
            s
        }
    })
}

pub fn write_identity(rows: usize, cols: usize, out: &Path, format: Format) -> Out {
    let text = render_identity(rows, cols, format)?;
    fs::write(out, text).map_err(|e| CliError::Failed(format!("writing {}: {e}", out.display())))?;
    let format = match format {
        Format::Pgm => "pgm",
        Format::Json => "json",
    };
    Ok(json!({ "rows": rows, "cols": cols, "format": format, "out": out.display().to_string() }))
}

/// Every closed form, determinant and board count for one cell.
pub fn verify_cell(parity: Parity, m: usize, n: usize) -> ReportRow {
    let mut row = ReportRow::new(m, n, parity.name());
    let (r, c) = parity.grid_dims(m, n);
    row.record("det", klein_det(r, c));
    let (a, b, cc) = block_triple(parity, n);
    row.record("block", block_tridiag_det(&a, &b, &cc, m));
    row.record("product", closed_form_count(parity, m, n, Form::Product));
    row.record("chebyshev", closed_form_count(parity, m, n, Form::Chebyshev));
    let (kind, br, bc) = tiling_board(parity, m, n);
    row.record("tilings", board_count(kind, br, bc));
    if parity == Parity::EvenOdd {
        row.record("mobius", board_count(BoardKind::Mobius, 2 * m, 2 * n));
        row.record("lu_wu", lu_wu_count(m, n));
        if n == 1 {
            row.record("tilings_odd_board", board_count(BoardKind::MobiusWeighted, 2 * m - 1, 2));
        }
    }
    row
}

fn apply_laplacian(g: &SandpileGraph, c: &[i64]) -> Result<Vec<BigInt>, Error> {
    let v: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
    g.reduced_laplacian().transpose().mul_vec(&v)
}

/// Tiling square root, oddness, order transfer and the folding checks for P_n.
pub fn verify_pn(n: usize) -> Result<ReportRow, Error> {
    let mut row = ReportRow::new(n, n, "p_n");
    let a = a_seq(n)?;
    row.record("a_n", Ok::<_, Error>(a.clone()));
    let tilings = board_count(BoardKind::Plain, 2 * n, 2 * n)?;
    let scale = BigInt::one() << n;
    let root = (&tilings / &scale).sqrt();
    if &root * &root * &scale == tilings {
        row.record("tilings_root", Ok::<_, Error>(root));
    } else {
        row.record("tilings_root", Err::<BigInt, _>("tiling count is not 2^n times a square"));
    }
    row.check("a_n_odd", &a % 2u8 == BigInt::one());

    let p = p_graph(n)?;
    let grid = grid_sandpile(2 * n, 2 * n)?;
    let grid_order = constant_order(&grid, 2)?;
    row.check("order_transfer", constant_order(&p, 2)? == grid_order);
    row.check("order_divides_a_n", (&a % &grid_order).is_zero());

    let t: Vec<BigInt> = pn_diagonal_config(n).into_iter().map(BigInt::from).collect();
    let s = pn_distance_config(n);
    row.check("s_n_to_t_n", apply_laplacian(&p, &s)? == t);
    let lhs = apply_laplacian(&grid, &pn_embed(n, &s)?)?;
    let rhs = pn_embed(n, &apply_laplacian(&p, &s)?)?;
    let side = 2 * n;
    let compatible = (0..side * side).all(|k| {
        let (i, j) = (k / side, k % side);
        let f = if i == j || i + j + 1 == side { 2 } else { 1 };
        lhs[k] == &rhs[k] * f
    });
    row.check("phi_compatible", compatible);
    Ok(row)
}

pub fn verify(max_m: usize, max_n: usize) -> Out {
    positive("max-m", max_m)?;
    positive("max-n", max_n)?;
    let cells: Vec<(Parity, usize, usize)> = Parity::ALL
        .iter()
        .flat_map(|&p| (1..=max_m).flat_map(move |m| (1..=max_n).map(move |n| (p, m, n))))
        .collect();
    let mut rows: Vec<ReportRow> = cells.par_iter().map(|&(p, m, n)| verify_cell(p, m, n)).collect();
    let pn: Vec<Result<ReportRow, Error>> = (1..=max_m.max(max_n)).into_par_iter().map(verify_pn).collect();
    for r in pn {
        rows.push(r?);
    }
    let agree = rows.iter().all(|r| r.agree);
    let out = json!({ "agree": agree, "rows": rows });
    if agree {
        Ok(out)
    } else {
        Err(CliError::Disagree(out))
    }
}

pub fn a_sequence(n: usize) -> Out {
    positive("n", n)?;
    let values = (1..=n).map(a_seq).collect::<Result<Vec<_>, _>>()?;
    let all_odd = values.iter().all(|a| a % 2u8 == BigInt::one());
    Ok(json!({ "n": n, "values": values.iter().map(big).collect::<Vec<_>>(), "all_odd": all_odd }))
}
