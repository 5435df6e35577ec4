//! Record and listing formats: text, JSON and CSV.

use std::fmt::Write as _;

use nsgp_core::{NumericalSemigroup, ParityClass};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SemigroupClass {
    IrreducibleSymmetric,
    IrreduciblePseudosymmetric,
    Ani,
    NonAtomic,
}

impl SemigroupClass {
    pub fn of(s: &NumericalSemigroup) -> Self {
        let label = s.classify();
        match label.parity_class {
            ParityClass::Symmetric => Self::IrreducibleSymmetric,
            ParityClass::PseudoSymmetric => Self::IrreduciblePseudosymmetric,
            ParityClass::None if label.is_ani => Self::Ani,
            ParityClass::None => Self::NonAtomic,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::IrreducibleSymmetric => "irreducible-symmetric",
            Self::IrreduciblePseudosymmetric => "irreducible-pseudosymmetric",
            Self::Ani => "ani",
            Self::NonAtomic => "non-atomic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub frobenius: u32,
    pub vector: String,
    pub gaps: Vec<u32>,
    pub generators: Vec<u32>,
    pub multiplicity: u32,
    pub special_gaps: Vec<u32>,
    pub class: SemigroupClass,
}

impl From<&NumericalSemigroup> for OutputRecord {
    fn from(s: &NumericalSemigroup) -> Self {
        Self {
            frobenius: s.frobenius(),
            vector: s.gap_vector().to_string(),
            gaps: s.gaps().collect(),
            generators: s.minimal_generators().to_vec(),
            multiplicity: s.multiplicity(),
            special_gaps: s.special_gaps(),
            class: SemigroupClass::of(s),
        }
    }
}

fn join_list(xs: &[u32], sep: &str) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(sep)
}

impl OutputRecord {
    /// `<gens> | F=<F> | E={..} | <class>`
    pub fn text_line(&self) -> String {
        format!(
            "<{}> | F={} | E={{{}}} | {}",
            join_list(&self.generators, ","),
            self.frobenius,
            join_list(&self.special_gaps, ","),
            self.class.as_str()
        )
    }
}

/// Flat CSV row; list fields are space-separated.
#[derive(Serialize)]
struct CsvRow<'a> {
    frobenius: u32,
    vector: &'a str,
    gaps: String,
    generators: String,
    multiplicity: u32,
    special_gaps: String,
    class: &'static str,
}

impl<'a> From<&'a OutputRecord> for CsvRow<'a> {
    fn from(r: &'a OutputRecord) -> Self {
        Self {
            frobenius: r.frobenius,
            vector: &r.vector,
            gaps: join_list(&r.gaps, " "),
            generators: join_list(&r.generators, " "),
            multiplicity: r.multiplicity,
            special_gaps: join_list(&r.special_gaps, " "),
            class: r.class.as_str(),
        }
    }
}

fn csv_string<T: Serialize>(rows: impl IntoIterator<Item = T>, header: &[&str]) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

const RECORD_HEADER: [&str; 7] = [
    "frobenius",
    "vector",
    "gaps",
    "generators",
    "multiplicity",
    "special_gaps",
    "class",
];

#[derive(Serialize, Deserialize)]
pub struct Listing {
    pub frobenius: u32,
    pub count: usize,
    pub semigroups: Vec<OutputRecord>,
}

pub fn render_record(s: &NumericalSemigroup, format: Format) -> String {
    let r = OutputRecord::from(s);
    match format {
        Format::Text => r.text_line() + "\n",
        Format::Json => serde_json::to_string(&r).expect("record serialises") + "\n",
        Format::Csv => csv_string([CsvRow::from(&r)], &RECORD_HEADER),
    }
}

pub fn render_listing(frobenius: u32, semigroups: &[NumericalSemigroup], format: Format) -> String {
    let records: Vec<OutputRecord> = semigroups.iter().map(OutputRecord::from).collect();
    match format {
        Format::Text => records.iter().fold(String::new(), |mut out, r| {
            out.push_str(&r.text_line());
            out.push('\n');
            out
        }),
        Format::Json => {
            let listing = Listing {
                frobenius,
                count: records.len(),
                semigroups: records,
            };
            serde_json::to_string(&listing).expect("listing serialises") + "\n"
        }
        Format::Csv => csv_string(records.iter().map(CsvRow::from), &RECORD_HEADER),
    }
}

pub fn render_levels(frobenius: u32, levels: &[u32], format: Format) -> String {
    match format {
        Format::Text => format!("L({frobenius}) = {{{}}}\n", join_list(levels, ",")),
        Format::Json => {
            serde_json::json!({ "frobenius": frobenius, "levels": levels }).to_string() + "\n"
        }
        Format::Csv => csv_string(levels.iter().map(|l| (l,)), &["level"]),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    #[serde(rename = "F")]
    pub frobenius: u32,
    pub irreducible: usize,
    pub ani: usize,
    pub atomic: usize,
}

pub fn render_census(rows: &[CensusRow], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = format!(
                "{:>4} {:>12} {:>8} {:>8}\n",
                "F", "irreducible", "ani", "atomic"
            );
            for r in rows {
                writeln!(
                    out,
                    "{:>4} {:>12} {:>8} {:>8}",
                    r.frobenius, r.irreducible, r.ani, r.atomic
                )
                .unwrap();
            }
            out
        }
        Format::Json => serde_json::to_string(rows).expect("rows serialise") + "\n",
        Format::Csv => csv_string(rows, &["F", "irreducible", "ani", "atomic"]),
    }
}
