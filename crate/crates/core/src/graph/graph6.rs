//! graph6 text encoding (one-byte order header, upper triangle in column
//! order packed six bits per byte, each byte offset by 63).

use thiserror::Error;

use super::{Graph, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("graph order {order} (header at offset 0) is not supported; the limit is {MAX_ORDER}")]
    Order { order: usize },
    #[error("expected {expected} bytes, found {found} (first offending offset {offset})")]
    Length { expected: usize, found: usize, offset: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    Padding { offset: usize },
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(((acc << (6 - k)) + 63) as char);
    }
    out
}

pub fn graph6_decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset, byte });
        }
    }
    let n = (head - 63) as usize;
    if n == 0 || n > MAX_ORDER {
        return Err(Graph6Error::Order { order: n });
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Length {
            expected: expected + 1,
            found: bytes.len(),
            offset: 1 + expected.min(body.len()),
        });
    }
    let mut g = Graph::empty(n).expect("order checked");
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos / 6] - 63;
            if byte & (1 << (5 - pos % 6)) != 0 {
                g.add_edge(i, j).expect("in range");
            }
            pos += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = body[body.len() - 1] - 63;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(Graph6Error::Padding { offset: bytes.len() - 1 });
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_is_bw() {
        let k3 = Graph::empty(3).unwrap().complement();
        assert_eq!(graph6_encode(&k3), "Bw");
        assert_eq!(graph6_decode("Bw").unwrap(), k3);
    }

    #[test]
    fn k4_is_c_tilde() {
        let k4 = Graph::empty(4).unwrap().complement();
        assert_eq!(graph6_encode(&k4), "C~");
    }

    #[test]
    fn edgeless_five() {
        let g = graph6_decode("D??").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn matches_reference_string() {
        // edges 0-2, 0-4, 1-3, 3-4 encode to "DQc" in the reference tools
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(graph6_encode(&g), "DQc");
    }

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1).unwrap();
        assert_eq!(graph6_encode(&g), "@");
        assert_eq!(graph6_decode("@").unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(graph6_decode(""), Err(Graph6Error::Empty));
        assert!(matches!(graph6_decode("D?"), Err(Graph6Error::Length { .. })));
        assert!(matches!(graph6_decode("D???"), Err(Graph6Error::Length { .. })));
        assert_eq!(graph6_decode("D?\x20"), Err(Graph6Error::BadByte { offset: 2, byte: 0x20 }));
        // K3 needs 3 bits; 'x' sets a padding bit
        assert_eq!(graph6_decode("Bx"), Err(Graph6Error::Padding { offset: 1 }));
        assert!(matches!(graph6_decode("_"), Err(Graph6Error::Order { order: 32 })));
        assert!(matches!(graph6_decode("?"), Err(Graph6Error::Order { order: 0 })));
    }
}
