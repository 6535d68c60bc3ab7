//! graph6 encoding: `N(n)` followed by the column-major upper triangle of the
//! adjacency matrix packed into 6-bit groups, each offset by 63.

use super::{ChemicalGraph, GraphError, MAX_DEGREE, MAX_ORDER};

const BIAS: u8 = 63;

pub fn encode_graph6(g: &ChemicalGraph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + BIAS);
        out.push(((n >> 6) & 0x3f) as u8 + BIAS);
        out.push((n & 0x3f) as u8 + BIAS);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.row(j);
        for i in 0..j {
            acc = acc << 1 | (row >> i & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode_graph6(text: &str) -> Result<ChemicalGraph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let bad = |msg: &str| GraphError::MalformedGraph6(format!("{msg} in {text:?}"));
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(&format!("byte {b:#04x} outside 63..=126")));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(bad("order above 258047"));
        }
        if bytes.len() < 4 {
            return Err(bad("truncated order field"));
        }
        let n = ((bytes[1] - BIAS) as usize) << 12
            | ((bytes[2] - BIAS) as usize) << 6
            | (bytes[3] - BIAS) as usize;
        if n <= 62 {
            return Err(bad("long order field used for a small order"));
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - BIAS) as usize, &bytes[1..])
    };
    if n == 0 || n > MAX_ORDER {
        return Err(GraphError::InvalidOrder(n));
    }
    let nbits = n * (n - 1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(bad(&format!(
            "expected {} data bytes for order {n}, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if (nbits..body.len() * 6).any(bit) {
        return Err(bad("nonzero padding bits"));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if let Some(v) = rows
        .iter()
        .position(|r| r.count_ones() as usize > MAX_DEGREE)
    {
        return Err(GraphError::DegreeExceedsFour(v));
    }
    Ok(ChemicalGraph::from_rows_unchecked(rows))
}
