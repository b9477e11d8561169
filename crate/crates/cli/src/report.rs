//! Serializable results and their text and CSV renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use extbar_core::extract::ExtTable;
use extbar_core::homology::{AbelianGroup, HomologyGroup};
use extbar_core::words::{word_degree, word_twisting, PPair, Word};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupEntry {
    pub degree: i64,
    pub free_rank: u64,
    /// Invariant factors.
    pub torsion: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarHomologyReport {
    pub schema_version: u32,
    pub ring: String,
    pub n: usize,
    pub weight: u32,
    pub m: u32,
    pub groups: Vec<GroupEntry>,
}

impl BarHomologyReport {
    pub fn new(ring: String, n: usize, weight: u32, m: u32, h: &HomologyGroup) -> Self {
        let groups = h
            .iter()
            .filter(|(b, g)| b.weight == weight && !g.is_zero())
            .map(|(b, g)| GroupEntry {
                degree: b.degree,
                free_rank: g.free_rank,
                torsion: g.torsion.clone(),
            })
            .collect();
        BarHomologyReport {
            schema_version: SCHEMA_VERSION,
            ring,
            n,
            weight,
            m,
            groups,
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!(
            "homology of B^{} Gamma(R^{}[2]) over R = {}, weight {}\n",
            self.n, self.m, self.ring, self.weight
        );
        if self.groups.is_empty() {
            s.push_str("zero\n");
        }
        for g in &self.groups {
            let _ = writeln!(s, "degree {}: {}", g.degree, show(&self.ring, g.free_rank, &g.torsion));
        }
        s
    }

    pub fn csv(&self) -> Result<String, csv::Error> {
        #[derive(Serialize)]
        struct Row<'a> {
            schema_version: u32,
            ring: &'a str,
            n: usize,
            weight: u32,
            m: u32,
            degree: i64,
            free_rank: u64,
            torsion: String,
        }
        let mut w = writer(&["schema_version", "ring", "n", "weight", "m", "degree", "free_rank", "torsion"])?;
        for g in &self.groups {
            w.serialize(Row {
                schema_version: self.schema_version,
                ring: &self.ring,
                n: self.n,
                weight: self.weight,
                m: self.m,
                degree: g.degree,
                free_rank: g.free_rank,
                torsion: join(&g.torsion),
            })?;
        }
        finish(w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtEntry {
    pub cohom_degree: i64,
    pub weight: u32,
    pub free_rank: u64,
    pub torsion: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtTableReport {
    pub schema_version: u32,
    pub source: String,
    pub target: String,
    pub ring: String,
    pub s: u32,
    pub t: u32,
    pub m: u32,
    pub max_weight: u32,
    pub max_codegree: Option<i64>,
    pub method: String,
    pub entries: Vec<ExtEntry>,
}

impl ExtTableReport {
    pub fn new(table: &ExtTable, s: u32, t: u32, max_codegree: Option<i64>, method: &str) -> Self {
        let mut entries: Vec<ExtEntry> = table
            .entries
            .iter()
            .filter(|((i, _), _)| max_codegree.is_none_or(|c| *i <= c))
            .map(|(&(i, w), g)| ExtEntry {
                cohom_degree: i,
                weight: w,
                free_rank: g.free_rank,
                torsion: g.torsion.clone(),
            })
            .collect();
        entries.sort_by_key(|e| (e.weight, e.cohom_degree));
        ExtTableReport {
            schema_version: SCHEMA_VERSION,
            source: table.source.to_string(),
            target: table.target.to_string(),
            ring: table.ring.to_string(),
            s,
            t,
            m: table.m,
            max_weight: table.max_weight,
            max_codegree,
            method: method.to_string(),
            entries,
        }
    }

    fn twist(base: &str, r: u32) -> String {
        if r == 0 {
            base.to_string()
        } else {
            format!("{base}^({r})")
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!(
            "E({}, {}) over {} on rank {}, weights <= {} ({})\n",
            Self::twist(&self.source, self.s + self.t),
            Self::twist(&self.target, self.s),
            self.ring,
            self.m,
            self.max_weight,
            self.method
        );
        let head = if self.ring == "Z" { "group" } else { "dim" };
        let _ = writeln!(s, "{:>6} {:>6}  {head}", "weight", "degree");
        for e in &self.entries {
            let _ = writeln!(
                s,
                "{:>6} {:>6}  {}",
                e.weight,
                e.cohom_degree,
                show(&self.ring, e.free_rank, &e.torsion)
            );
        }
        s
    }

    pub fn csv(&self) -> Result<String, csv::Error> {
        #[derive(Serialize)]
        struct Row<'a> {
            schema_version: u32,
            source: &'a str,
            target: &'a str,
            ring: &'a str,
            s: u32,
            t: u32,
            m: u32,
            weight: u32,
            cohom_degree: i64,
            free_rank: u64,
            torsion: String,
        }
        let mut w = writer(&["schema_version", "source", "target", "ring", "s", "t", "m", "weight", "cohom_degree", "free_rank", "torsion"])?;
        for e in &self.entries {
            w.serialize(Row {
                schema_version: self.schema_version,
                source: &self.source,
                target: &self.target,
                ring: &self.ring,
                s: self.s,
                t: self.t,
                m: self.m,
                weight: e.weight,
                cohom_degree: e.cohom_degree,
                free_rank: e.free_rank,
                torsion: join(&e.torsion),
            })?;
        }
        finish(w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordEntry {
    pub word: String,
    pub degree: u64,
    pub twisting: u32,
    pub weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEntry {
    pub gamma_word: String,
    pub phi_word: String,
    pub degree: u64,
    pub twisting: u32,
    pub weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordsReport {
    pub schema_version: u32,
    pub p: u64,
    pub height: usize,
    pub max_degree: u64,
    pub words: Vec<WordEntry>,
    pub pairs: Option<Vec<PairEntry>>,
}

impl WordsReport {
    pub fn new(p: u64, height: usize, max_degree: u64, words: &[Word], pairs: Option<&[PPair]>) -> Self {
        WordsReport {
            schema_version: SCHEMA_VERSION,
            p,
            height,
            max_degree,
            words: words
                .iter()
                .map(|w| WordEntry {
                    word: w.format(p),
                    degree: word_degree(w, p),
                    twisting: word_twisting(w),
                    weight: p.pow(word_twisting(w)),
                })
                .collect(),
            pairs: pairs.map(|ps| {
                ps.iter()
                    .map(|pp| PairEntry {
                        gamma_word: pp.gamma_word.format(p),
                        phi_word: pp.phi_word.format(p),
                        degree: pp.degree,
                        twisting: pp.twisting,
                        weight: pp.weight,
                    })
                    .collect()
            }),
        }
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        match &self.pairs {
            None => {
                for w in &self.words {
                    let _ = writeln!(
                        s,
                        "{:<16} degree {:>4}  twisting {}  weight {}",
                        w.word, w.degree, w.twisting, w.weight
                    );
                }
            }
            Some(pairs) => {
                for pp in pairs {
                    let _ = writeln!(
                        s,
                        "{:<16} {:<16} degree {:>4}  twisting {}  weight {}",
                        pp.gamma_word, pp.phi_word, pp.degree, pp.twisting, pp.weight
                    );
                }
            }
        }
        s
    }

    pub fn csv(&self) -> Result<String, csv::Error> {
        let mut w = writer(if self.pairs.is_some() {
            &["gamma_word", "phi_word", "degree", "twisting", "weight"][..]
        } else {
            &["word", "degree", "twisting", "weight"][..]
        })?;
        match &self.pairs {
            None => {
                for e in &self.words {
                    w.serialize(e)?;
                }
            }
            Some(pairs) => {
                for e in pairs {
                    w.serialize(e)?;
                }
            }
        }
        finish(w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub suite: String,
    pub passed: bool,
    pub checks: u64,
    pub first_mismatch: Option<String>,
}

impl VerifyReport {
    pub fn text(&self) -> String {
        match &self.first_mismatch {
            None => format!("{}: PASS ({} checks)\n", self.suite, self.checks),
            Some(m) => format!("{}: FAIL after {} checks: {}\n", self.suite, self.checks, m),
        }
    }

    pub fn csv(&self) -> Result<String, csv::Error> {
        let mut w = writer(&["schema_version", "suite", "passed", "checks", "first_mismatch"])?;
        w.serialize(self)?;
        finish(w)
    }
}

/// A group over `Z`, a dimension over a field.
fn show(ring: &str, free_rank: u64, torsion: &[u64]) -> String {
    if ring == "Z" {
        AbelianGroup {
            free_rank,
            torsion: torsion.to_vec(),
        }
        .to_string()
    } else {
        free_rank.to_string()
    }
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(";")
}

fn writer(header: &[&str]) -> Result<csv::Writer<Vec<u8>>, csv::Error> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(header)?;
    Ok(w)
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String, csv::Error> {
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
