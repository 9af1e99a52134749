use num_bigint::BigInt;

use crate::error::{Error, Result};

/// An OEIS term list: `(index, value)` pairs with contiguous indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub oeis_id: String,
    pub pairs: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn first_index(&self) -> Option<i64> {
        self.pairs.first().map(|(i, _)| *i)
    }

    pub fn last_index(&self) -> Option<i64> {
        self.pairs.last().map(|(i, _)| *i)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `a(index)`, if the file covers it.
    pub fn get(&self, index: i64) -> Option<&BigInt> {
        let first = self.first_index()?;
        let j = usize::try_from(index.checked_sub(first)?).ok()?;
        self.pairs.get(j).map(|(_, v)| v)
    }
}

/// First `A` followed by six digits in a comment line, if any.
fn id_in_comment(line: &str) -> Option<String> {
    let bytes = line.as_bytes();
    (0..bytes.len().saturating_sub(6)).find_map(|j| {
        let word = &line[j..j + 7];
        let boundary = j == 0 || !bytes[j - 1].is_ascii_alphanumeric();
        let digits = word[1..].bytes().all(|b| b.is_ascii_digit());
        let end = bytes.get(j + 7).is_none_or(|b| !b.is_ascii_alphanumeric());
        (word.starts_with('A') && boundary && digits && end).then(|| word.to_string())
    })
}

/// Parses b-file text: `#` comments, blank lines, and `index value` data
/// lines separated by whitespace. LF and CRLF endings are both accepted.
///
/// The sequence id is taken from the first comment that names one; it is
/// empty otherwise.
pub fn parse_bfile(text: &str) -> Result<BFile> {
    let mut oeis_id = String::new();
    let mut pairs: Vec<(i64, BigInt)> = Vec::new();
    for (j, raw) in text.lines().enumerate() {
        let line_no = j + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            if oeis_id.is_empty() {
                oeis_id = id_in_comment(line).unwrap_or_default();
            }
            continue;
        }
        let malformed = || Error::MalformedLine {
            line: line_no,
            content: raw.to_string(),
        };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed());
        };
        let index: i64 = index.parse().map_err(|_| malformed())?;
        let value: BigInt = value.parse().map_err(|_| malformed())?;
        if let Some(&(prev, _)) = pairs.last() {
            if index != prev + 1 {
                return Err(Error::NonContiguousIndex {
                    line: line_no,
                    expected: prev + 1,
                    found: index,
                });
            }
        }
        pairs.push((index, value));
    }
    Ok(BFile { oeis_id, pairs })
}
