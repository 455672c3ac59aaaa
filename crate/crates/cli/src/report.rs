//! Machine-readable report documents and their human-readable renderings.
//!
//! JSON field order is fixed by struct declaration order and output carries
//! no timestamps unless requested, so identical inputs give byte-identical
//! documents. Integers of any size are emitted as plain JSON numbers.

use std::io::Write;

use bridgeslope_core::{
    CalibrationTrial, Diagnostic, Expansion, FamilyReport, KnotReport, Rational, SurfaceClass,
};
use num_bigint::BigInt;
use serde::{Serialize, Serializer};

pub const SCHEMA_VERSION: &str = "1";

/// Arbitrary-precision integer serialized as a bare JSON number.
#[derive(Debug, Clone)]
pub struct Big(pub BigInt);

impl Serialize for Big {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n = serde_json::Number::from_string_unchecked(self.0.to_string());
        n.serialize(serializer)
    }
}

fn big(b: &BigInt) -> Big {
    Big(b.clone())
}

fn bigs(v: &[BigInt]) -> Vec<Big> {
    v.iter().map(big).collect()
}

/// Rational rendered as "p" or "p/q".
pub fn rational_str(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Serialize)]
pub struct ReportDocument<I: Serialize, P: Serialize> {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub inputs: I,
    pub payload: P,
    pub diagnostics: Vec<DiagnosticDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
}

impl<I: Serialize, P: Serialize> ReportDocument<I, P> {
    pub fn new(command: &'static str, inputs: I, payload: P) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            command,
            inputs,
            payload,
            diagnostics: Vec::new(),
            generated_at: None,
        }
    }

    pub fn print_json(&self) {
        println!("{}", serde_json::to_string_pretty(self).expect("serializable"));
    }
}

#[derive(Serialize)]
pub struct DiagnosticDto {
    pub alpha: Big,
    pub beta: Big,
    pub error: String,
}

impl From<&Diagnostic> for DiagnosticDto {
    fn from(d: &Diagnostic) -> Self {
        DiagnosticDto {
            alpha: big(d.knot.alpha()),
            beta: big(d.knot.beta()),
            error: d.error.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct ExpansionDto {
    pub integer_part: Big,
    pub entries: Vec<Big>,
}

impl From<&Expansion> for ExpansionDto {
    fn from(e: &Expansion) -> Self {
        ExpansionDto {
            integer_part: big(e.integer_part()),
            entries: bigs(e.entries()),
        }
    }
}

#[derive(Serialize)]
pub struct SurfaceClassDto {
    pub subtuple: Vec<usize>,
    pub c: Big,
    pub slope: Big,
    pub is_seifert: bool,
    pub expansion: Option<ExpansionDto>,
}

impl From<&SurfaceClass> for SurfaceClassDto {
    fn from(c: &SurfaceClass) -> Self {
        SurfaceClassDto {
            subtuple: c.subtuple.indices().to_vec(),
            c: big(&c.c),
            slope: big(&c.slope),
            is_seifert: c.is_seifert,
            expansion: c.expansion.as_ref().map(ExpansionDto::from),
        }
    }
}

#[derive(Serialize)]
pub struct KnotReportDto {
    pub alpha: Big,
    pub beta: Big,
    pub positive_expansion: ExpansionDto,
    pub even_expansion: ExpansionDto,
    pub classes: Vec<SurfaceClassDto>,
    pub genus: u64,
    pub fibered: bool,
    pub unique_zero_slope: bool,
    pub slope_multiset: Vec<Big>,
}

impl From<&KnotReport> for KnotReportDto {
    fn from(r: &KnotReport) -> Self {
        KnotReportDto {
            alpha: big(r.knot.alpha()),
            beta: big(r.knot.beta()),
            positive_expansion: (&r.positive_expansion).into(),
            even_expansion: (&r.even_expansion).into(),
            classes: r.classes.iter().map(SurfaceClassDto::from).collect(),
            genus: r.genus,
            fibered: r.fibered,
            unique_zero_slope: r.unique_zero_slope,
            slope_multiset: bigs(&r.slope_multiset),
        }
    }
}

#[derive(Serialize)]
pub struct FamilyChecksDto {
    pub expansion_matches: bool,
    pub subtuples_match: bool,
    pub c_values_match: bool,
    pub c_distinct: bool,
    pub fibered: bool,
    pub genus_is_g: bool,
    pub unique_zero_slope: bool,
}

#[derive(Serialize)]
pub struct FamilyReportDto {
    pub g: Big,
    pub checks: FamilyChecksDto,
    pub computed_c: Vec<Big>,
    pub expected_c: Vec<Big>,
    pub all_passed: bool,
}

impl From<&FamilyReport> for FamilyReportDto {
    fn from(r: &FamilyReport) -> Self {
        FamilyReportDto {
            g: big(&r.g),
            checks: FamilyChecksDto {
                expansion_matches: r.expansion_matches,
                subtuples_match: r.subtuples_match,
                c_values_match: r.c_values_match,
                c_distinct: r.c_distinct,
                fibered: r.fibered,
                genus_is_g: r.genus_is_g,
                unique_zero_slope: r.unique_zero_slope,
            },
            computed_c: bigs(&r.computed_c),
            expected_c: bigs(&r.expected_c),
            all_passed: r.all_passed,
        }
    }
}

#[derive(Serialize)]
pub struct CalibrationTrialDto {
    pub scale: String,
    pub sign: i8,
    pub figure_eight_slopes: Vec<String>,
    pub k11_4_probe: String,
    pub integral: bool,
    pub accepted: bool,
}

impl From<&CalibrationTrial> for CalibrationTrialDto {
    fn from(t: &CalibrationTrial) -> Self {
        CalibrationTrialDto {
            scale: rational_str(&t.scale),
            sign: t.sign,
            figure_eight_slopes: t.figure_eight_slopes.iter().map(rational_str).collect(),
            k11_4_probe: rational_str(&t.k11_4_probe),
            integral: t.integral,
            accepted: t.accepted,
        }
    }
}

pub fn render_subtuple(indices: &[usize]) -> String {
    let inner: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
    format!("({})", inner.join(","))
}

/// One row per surface class: alpha, beta, subtuple, c, slope, is_seifert.
pub fn write_classes_csv<W: Write>(out: W, reports: &[&KnotReport]) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(out);
    w.write_record(["alpha", "beta", "subtuple", "c", "slope", "is_seifert"])?;
    for r in reports {
        for c in &r.classes {
            w.write_record([
                r.knot.alpha().to_string(),
                r.knot.beta().to_string(),
                render_subtuple(c.subtuple.indices()),
                c.c.to_string(),
                c.slope.to_string(),
                c.is_seifert.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn print_knot_table(r: &KnotReport) {
    println!("{}", r.knot);
    println!("  positive expansion: {}", r.positive_expansion);
    println!("  even expansion:     {}", r.even_expansion);
    println!(
        "  genus: {}   fibered: {}   unique slope-0 class: {}",
        r.genus, r.fibered, r.unique_zero_slope
    );
    println!("  {:<10} {:>6} {:>7}  class", "subtuple", "c", "slope");
    for c in &r.classes {
        let kind = if c.is_seifert { "Seifert" } else { "" };
        let exp = c
            .expansion
            .as_ref()
            .map(|e| format!("  {e}"))
            .unwrap_or_default();
        println!(
            "  {:<10} {:>6} {:>7}  {}{}",
            render_subtuple(c.subtuple.indices()),
            c.c.to_string(),
            c.slope.to_string(),
            kind,
            exp
        );
    }
}
