//! Edge-list and graph6 readers/writers.

use log::warn;

use crate::error::{Error, Result};

use super::{Graph, MAX_VERTICES};

/// Parses the line-oriented edge-list format.
///
/// ```text
/// # comment
/// n 5          (optional header)
/// 1 2
/// 2 3
/// ```
///
/// Labels are 1-based. Without a header the vertex count is the largest
/// label. Repeated edges are dropped with a warning.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: String| Error::Parse { line: line_no, msg };
        if toks[0] == "n" {
            if declared.is_some() || !edges.is_empty() {
                return Err(err(
                    "header `n <count>` must come first and only once".into()
                ));
            }
            let [_, count] = toks[..] else {
                return Err(err(format!("malformed header `{line}`")));
            };
            let count: usize = count
                .parse()
                .map_err(|_| err(format!("bad vertex count `{count}`")))?;
            if count == 0 {
                return Err(err("vertex count must be positive".into()));
            }
            declared = Some(count);
            continue;
        }
        let [a, b] = toks[..] else {
            return Err(err(format!("expected `u v`, got `{line}`")));
        };
        let parse_label = |t: &str| -> Result<usize> {
            match t.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v),
                _ => Err(err(format!("`{t}` is not a positive integer label"))),
            }
        };
        let (u, v) = (parse_label(a)?, parse_label(b)?);
        if u == v {
            return Err(err(format!("loop edge {u} {v}")));
        }
        if let Some(n) = declared {
            if u > n || v > n {
                return Err(err(format!("label exceeds declared n = {n}")));
            }
        }
        edges.push((line_no, u, v));
    }
    let n = match declared {
        Some(n) => n,
        None => edges
            .iter()
            .map(|&(_, u, v)| u.max(v))
            .max()
            .ok_or(Error::Parse {
                line: 0,
                msg: "empty edge list without `n` header".into(),
            })?,
    };
    if n > MAX_VERTICES {
        return Err(Error::Cap(format!(
            "{n} vertices exceeds the limit of {MAX_VERTICES}"
        )));
    }
    let mut g = Graph::empty(n)?;
    for (line, u, v) in edges {
        if !g.add_edge(u - 1, v - 1)? {
            warn!("line {line}: duplicate edge {u} {v} ignored");
        }
    }
    Ok(g)
}

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line (optional `>>graph6<<` header).
pub fn parse_graph6(text: impl AsRef<[u8]>) -> Result<Graph> {
    let mut bytes = text.as_ref();
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    let bytes = bytes.strip_prefix(HEADER.as_bytes()).unwrap_or(bytes);
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("invalid byte {b} at offset {i}")));
        }
    }
    let six = |i: usize| -> Result<u64> {
        bytes
            .get(i)
            .map(|&b| u64::from(b - 63))
            .ok_or_else(|| Error::Graph6("truncated size field".into()))
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(Error::Graph6("empty input".into())),
        Some(126) if bytes.get(1) == Some(&126) => {
            let mut n = 0u64;
            for i in 2..8 {
                n = (n << 6) | six(i)?;
            }
            (n, 8)
        }
        Some(126) => {
            let mut n = 0u64;
            for i in 1..4 {
                n = (n << 6) | six(i)?;
            }
            (n, 4)
        }
        Some(&b) => (u64::from(b - 63), 1),
    };
    let n = usize::try_from(n).map_err(|_| Error::Graph6("vertex count overflow".into()))?;
    if n > MAX_VERTICES {
        return Err(Error::Cap(format!(
            "graph6 declares {n} vertices; limit is {MAX_VERTICES}"
        )));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(Error::Graph6(format!(
            "truncated bit vector: need {nbytes} bytes, found {}",
            bytes.len() - pos
        )));
    }
    if bytes.len() > pos + nbytes {
        return Err(Error::Graph6("trailing bytes after bit vector".into()));
    }
    // n = 0 is a legal graph6 string but not a graph here.
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    pos += nbytes;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

/// Encodes `g` as graph6 (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_family;

    #[test]
    fn edge_list_basic() {
        let g = parse_edge_list("1 2\n2 3").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_list_header_comments_and_isolated_vertices() {
        let g = parse_edge_list("# a comment\nn 5\n\n1 2  # trailing\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edge_list_cycle_eight() {
        let text = (1..8)
            .map(|i| format!("{} {}\n", i, i + 1))
            .collect::<String>()
            + "1 8\n";
        assert_eq!(
            parse_edge_list(&text).unwrap(),
            make_family("cycle", &[8]).unwrap()
        );
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            parse_edge_list("1 1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("1 2\n2"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 3\n1 4"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_edge_list("0 1").is_err());
        assert!(parse_edge_list("a b").is_err());
        assert!(parse_edge_list("1 2\nn 3").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn edge_list_duplicate_is_not_an_error() {
        let g = parse_edge_list("1 2\n2 1\n1 2").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn graph6_round_trip_star() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(encode_graph6(&g), "D?{");
        assert_eq!(
            g,
            make_family("star", &[4])
                .unwrap()
                .relabel(&[4, 0, 1, 2, 3])
                .unwrap()
        );
    }

    #[test]
    fn graph6_header_and_newline() {
        let g = parse_graph6(">>graph6<<D?{\n").unwrap();
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn graph6_errors() {
        let raw: &[u8] = &[b'D', b'?', 200];
        assert!(
            matches!(parse_graph6(raw), Err(Error::Graph6(m)) if m.contains("invalid byte 200"))
        );
        assert!(matches!(parse_graph6("D?"), Err(Error::Graph6(m)) if m.contains("truncated")));
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D?{?").is_err());
    }

    #[test]
    fn graph6_long_size_field() {
        let g = make_family("path", &[63]).unwrap();
        let s = encode_graph6(&g);
        assert_eq!(&s[..4], "~??~");
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
