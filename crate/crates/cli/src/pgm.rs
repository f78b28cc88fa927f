//! Plain-text greymap for grain counts.

pub const MAXVAL: u64 = 3;

pub fn write_pgm(rows: usize, cols: usize, values: &[u64]) -> String {
    let mut out = format!("P2\n{cols} {rows}\n{MAXVAL}\n");
    for row in values.chunks(cols) {
        let line: Vec<String> = row.iter().map(u64::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Returns (rows, cols, values).
pub fn read_pgm(text: &str) -> Result<(usize, usize, Vec<u64>), String> {
    let mut tokens = text.split_whitespace();
    if tokens.next() != Some("P2") {
        return Err("not an ASCII greymap".into());
    }
    let mut num = || -> Result<u64, String> {
        tokens.next().ok_or("truncated header")?.parse().map_err(|e| format!("{e}"))
    };
    let (cols, rows, maxval) = (num()? as usize, num()? as usize, num()?);
    let values: Vec<u64> = tokens.map(|t| t.parse().map_err(|e| format!("{e}"))).collect::<Result<_, String>>()?;
    if values.len() != rows * cols || values.iter().any(|&v| v > maxval) {
        return Err("pixel data does not match header".into());
    }
    Ok((rows, cols, values))
}
