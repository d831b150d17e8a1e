//! Plain-text storage for completed classifications.
//!
//! One file holds one classification: a header `LCDDB 1 q n k N`, then one
//! line per class of the form `G <k digit-strings> AUT <int> D <int> DD <int>
//! WE <comma-separated ints>`. Digit strings list the most significant
//! coordinate first. Loading always re-verifies: every representative is
//! re-canonized and the mass identity is re-proven, so a realized database is
//! as trustworthy as a fresh run.

use std::collections::HashMap;
use std::fmt::Write as _;

use lcd_core::classify::{ClassRecord, ClassificationResult};
use lcd_core::mass;
use lcd_core::{
    key_and_aut, CanonicalKey, Error, Field, FqMatrix, FqVector, LinearCode, Result,
};
use num_bigint::BigUint;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DbClass {
    pub rows: Vec<String>,
    pub aut_order: BigUint,
    pub min_weight: usize,
    pub dual_min_weight: usize,
    pub enumerator: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DbFile {
    pub field: Field,
    pub n: usize,
    pub k: usize,
    pub classes: Vec<DbClass>,
}

impl DbFile {
    pub fn file_name(field: Field, n: usize, k: usize) -> String {
        format!("q{}_n{n}_k{k}.lcddb", field.order())
    }

    pub fn from_result(result: &ClassificationResult) -> DbFile {
        let classes = result
            .classes
            .iter()
            .map(|rec| DbClass {
                rows: rec.code.generator().rows().iter().map(FqVector::to_string).collect(),
                aut_order: rec.aut_order.clone(),
                min_weight: rec.min_weight,
                dual_min_weight: rec.dual_min_weight,
                enumerator: rec.enumerator.coeffs().to_vec(),
            })
            .collect();
        DbFile { field: result.field, n: result.n, k: result.k, classes }
    }

    pub fn serialize(&self) -> String {
        let mut out = format!(
            "LCDDB 1 {} {} {} {}\n",
            self.field.order(),
            self.n,
            self.k,
            self.classes.len()
        );
        for class in &self.classes {
            out.push('G');
            for row in &class.rows {
                out.push(' ');
                out.push_str(row);
            }
            let coeffs =
                class.enumerator.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
            let _ = writeln!(
                out,
                " AUT {} D {} DD {} WE {coeffs}",
                class.aut_order, class.min_weight, class.dual_min_weight
            );
        }
        out
    }

    pub fn parse(text: &str) -> Result<DbFile> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| malformed(1, "empty file"))?;
        let tok: Vec<&str> = header.split_whitespace().collect();
        if tok.len() != 6 || tok[0] != "LCDDB" {
            return Err(malformed(1, "header must read `LCDDB 1 <q> <n> <k> <classes>`"));
        }
        if tok[1] != "1" {
            return Err(malformed(1, format!("unsupported format version {}", tok[1])));
        }
        let q: u64 = number(1, tok[2], "field order")?;
        let field = Field::from_order(q).map_err(|e| malformed(1, e.to_string()))?;
        let n: usize = number(1, tok[3], "length")?;
        let k: usize = number(1, tok[4], "dimension")?;
        let count: usize = number(1, tok[5], "class count")?;
        if k == 0 || k >= n {
            return Err(malformed(1, format!("dimension {k} is not within 1..{n}")));
        }

        let mut classes = Vec::with_capacity(count);
        for i in 0..count {
            let line_no = i + 2;
            let line = lines
                .next()
                .ok_or_else(|| malformed(line_no, format!("expected {count} class lines")))?;
            classes.push(parse_class(line_no, line, field, n, k)?);
        }
        for line in lines {
            if !line.trim().is_empty() {
                return Err(malformed(0, format!("trailing content after {count} classes")));
            }
        }
        Ok(DbFile { field, n, k, classes })
    }

    /// Rebuilds the classification, re-proving everything the file claims:
    /// rows span an LCD [n,k] code in reduced form, canonical keys are
    /// pairwise distinct, the stored invariants match recomputed ones, and the
    /// class sizes sum to the mass target.
    pub fn realize(&self) -> Result<ClassificationResult> {
        let (field, n, k) = (self.field, self.n, self.k);
        let target =
            mass::mass(field, n, k).map_err(|e| Error::Domain(format!("header: {e}")))?;
        let group = mass::monomial_group_order(field, n);
        let zero = BigUint::default();

        let mut by_key: HashMap<CanonicalKey, usize> = HashMap::new();
        let mut classes = Vec::with_capacity(self.classes.len());
        let mut total = BigUint::default();
        for (idx, entry) in self.classes.iter().enumerate() {
            let fail = |msg: String| Error::Domain(format!("class {idx}: {msg}"));
            let rows = entry
                .rows
                .iter()
                .map(|r| FqVector::parse(field, r))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| fail(e.to_string()))?;
            let m = FqMatrix::from_rows(rows).map_err(|e| fail(e.to_string()))?;
            let code = LinearCode::from_generator(&m).map_err(|e| fail(e.to_string()))?;
            if code.len() != n || code.dim() != k {
                return Err(fail(format!(
                    "rows span a [{},{}] code, not [{n},{k}]",
                    code.len(),
                    code.dim()
                )));
            }
            for (i, row) in code.generator().rows().iter().enumerate() {
                if row.to_string() != entry.rows[i] {
                    return Err(fail(format!("row {i} is not in reduced echelon form")));
                }
            }
            if !code.is_lcd() {
                return Err(fail(format!(
                    "code is not complementary dual (hull dimension {})",
                    code.hull_dim()
                )));
            }
            let (key, aut) = key_and_aut(&code).map_err(|e| fail(e.to_string()))?;
            if aut != entry.aut_order {
                return Err(fail(format!(
                    "stored automorphism order {} but recomputed {aut}",
                    entry.aut_order
                )));
            }
            if let Some(&dup) = by_key.get(&key) {
                return Err(fail(format!("equivalent to class {dup}")));
            }
            let min_weight = code.min_weight().map_err(|e| fail(e.to_string()))?;
            if min_weight != entry.min_weight {
                return Err(fail(format!(
                    "stored minimum weight {} but recomputed {min_weight}",
                    entry.min_weight
                )));
            }
            let dual_min_weight = code.dual_min_weight().map_err(|e| fail(e.to_string()))?;
            if dual_min_weight != entry.dual_min_weight {
                return Err(fail(format!(
                    "stored dual minimum weight {} but recomputed {dual_min_weight}",
                    entry.dual_min_weight
                )));
            }
            let enumerator = code.weight_enumerator().map_err(|e| fail(e.to_string()))?.clone();
            if enumerator.coeffs() != entry.enumerator {
                return Err(fail("stored weight enumerator disagrees".into()));
            }
            if &group % &aut != zero {
                return Err(fail(format!(
                    "automorphism order {aut} does not divide the monomial group order {group}"
                )));
            }
            total += &group / &aut;
            if total > target {
                return Err(fail(format!("accumulated mass {total} exceeds the target {target}")));
            }
            by_key.insert(key.clone(), idx);
            classes.push(ClassRecord {
                code,
                key,
                aut_order: aut,
                min_weight,
                dual_min_weight,
                enumerator,
            });
        }
        if total != target {
            return Err(Error::Domain(format!(
                "mass identity fails: accumulated {total} of {target}"
            )));
        }
        Ok(ClassificationResult {
            field,
            n,
            k,
            strategy: None,
            classes,
            target_mass: target,
            accumulated_mass: total,
            complete: true,
            candidates_examined: 0,
            lcd_survivors: 0,
        })
    }
}

fn parse_class(line_no: usize, line: &str, field: Field, n: usize, k: usize) -> Result<DbClass> {
    let tok: Vec<&str> = line.split_whitespace().collect();
    if tok.len() != k + 9
        || tok[0] != "G"
        || tok[k + 1] != "AUT"
        || tok[k + 3] != "D"
        || tok[k + 5] != "DD"
        || tok[k + 7] != "WE"
    {
        return Err(malformed(
            line_no,
            format!("expected `G <{k} rows> AUT <int> D <int> DD <int> WE <ints>`"),
        ));
    }
    let alphabet = field.order() as u32;
    let mut rows = Vec::with_capacity(k);
    for &row in &tok[1..=k] {
        let ok = row.chars().all(|c| c.to_digit(10).is_some_and(|d| d < alphabet));
        if row.len() != n || !ok {
            return Err(malformed(line_no, format!("`{row}` is not a length-{n} {field} row")));
        }
        rows.push(row.to_string());
    }
    let aut_order: BigUint = tok[k + 2]
        .parse()
        .map_err(|_| malformed(line_no, format!("bad automorphism order `{}`", tok[k + 2])))?;
    let min_weight: usize = number(line_no, tok[k + 4], "minimum weight")?;
    let dual_min_weight: usize = number(line_no, tok[k + 6], "dual minimum weight")?;
    let enumerator = tok[k + 8]
        .split(',')
        .map(|c| c.parse::<u64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| malformed(line_no, "bad weight enumerator coefficient"))?;
    if enumerator.len() != n + 1 {
        return Err(malformed(
            line_no,
            format!("weight enumerator has {} coefficients, expected {}", enumerator.len(), n + 1),
        ));
    }
    Ok(DbClass { rows, aut_order, min_weight, dual_min_weight, enumerator })
}

fn malformed(line_no: usize, msg: impl Into<String>) -> Error {
    Error::Domain(format!("line {line_no}: {}", msg.into()))
}

fn number<T: std::str::FromStr>(line_no: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse().map_err(|_| malformed(line_no, format!("bad {what} `{tok}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use lcd_core::Classifier;

    fn sample() -> ClassificationResult {
        (*Classifier::new().classify(Field::Gf2, 5, 2).unwrap()).clone()
    }

    #[test]
    fn round_trip_is_byte_stable() {
        let result = sample();
        let text = DbFile::from_result(&result).serialize();
        let reparsed = DbFile::parse(&text).unwrap();
        assert_eq!(reparsed.serialize(), text);

        let realized = reparsed.realize().unwrap();
        assert_eq!(realized.class_count(), result.class_count());
        assert_eq!(realized.strategy, None);
        assert!(realized.complete);
        for (a, b) in realized.classes.iter().zip(result.classes.iter()) {
            assert_eq!(a.key, b.key);
            assert_eq!(a.aut_order, b.aut_order);
        }
    }

    #[test]
    fn realize_rejects_a_corrupted_row() {
        let text = DbFile::from_result(&sample()).serialize();
        let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
        let flipped = lines[1].replacen("G 10", "G 11", 1);
        assert_ne!(flipped, lines[1]);
        lines[1] = flipped;
        let db = DbFile::parse(&(lines.join("\n") + "\n")).unwrap();
        assert!(db.realize().is_err());
    }

    #[test]
    fn realize_rejects_a_duplicated_class() {
        let text = DbFile::from_result(&sample()).serialize();
        let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
        lines.push(lines[1].clone());
        lines[0] = lines[0].rsplit_once(' ').map(|(h, c)| {
            let n: usize = c.parse().unwrap();
            format!("{h} {}", n + 1)
        }).unwrap();
        let db = DbFile::parse(&(lines.join("\n") + "\n")).unwrap();
        let err = db.realize().unwrap_err().to_string();
        assert!(err.contains("equivalent") || err.contains("mass"), "{err}");
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(DbFile::parse("").is_err());
        assert!(DbFile::parse("LCDDB 2 2 5 2 0\n").is_err());
        assert!(DbFile::parse("LCDDB 1 4 5 2 0\n").is_err());
        assert!(DbFile::parse("LCDDB 1 2 5 2 1\n").is_err());
        assert!(DbFile::parse("LCDDB 1 2 5 2 1\nG 10011 AUT 2 D 2 DD 2 WE 1,0,1,1,1,0\n")
            .is_err());
        let ok = "LCDDB 1 2 5 2 1\nG 10011 01010 AUT 2 D 2 DD 2 WE 1,0,1,1,1,0\n";
        assert!(DbFile::parse(ok).is_ok());
    }
}
