//! Group spec files.
//!
//! Line-oriented `key = value` pairs grouped in sections; `#` starts a
//! comment. Factor indices are 1-based.
//!
//! ```text
//! [factor]
//! name = SL2_5            # SL2_5, SL2_7 or THREE_A6
//!
//! [factor]
//! special_linear = 2, 7   # SL(d, q) for (2,5), (2,7), (3,4)
//!
//! [amalgamate]
//! factors = 1, 2
//! elements = z, z         # z = canonical central generator, z^k a power of it,
//!                         # x17 = element index 17 (must be central)
//!
//! [analysis]
//! oracle = false          # run the brute-force regular-subgroup oracle
//! identities = true       # run the identity suite
//! seed = 7                # seed for sampled checks
//! guard = 1000000         # normal-subgroup lattice guard for the oracle
//! ```

use std::path::Path;

use semihol_core::constructors::BuiltinName;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct SpecError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> SpecError {
    SpecError { line, message: message.into() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorEntry {
    Builtin(BuiltinName),
    SpecialLinear { dim: usize, q: usize },
}

/// An element of a factor: a power of its canonical central generator, or
/// a raw element index (which must still be central).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    Power(u64),
    Element(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AmalgamateEntry {
    /// 0-based factor indices
    pub factors: (usize, usize),
    pub elements: (Selector, Selector),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisFlags {
    pub oracle: bool,
    pub identities: bool,
    pub seed: u64,
    pub guard: Option<usize>,
}

impl Default for AnalysisFlags {
    fn default() -> Self {
        AnalysisFlags { oracle: false, identities: true, seed: 7, guard: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupSpecFile {
    pub factors: Vec<FactorEntry>,
    pub amalgamations: Vec<AmalgamateEntry>,
    pub analysis: AnalysisFlags,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Factor,
    Amalgamate,
    Analysis,
}

#[derive(Default)]
struct PendingAmalgamation {
    line: usize,
    factors: Option<(usize, usize)>,
    elements: Option<(Selector, Selector)>,
}

fn pair<'a>(line: usize, value: &'a str) -> Result<(&'a str, &'a str), SpecError> {
    let parts: Vec<&str> = value.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => Ok((a, b)),
        _ => Err(err(line, format!("expected two comma-separated values, got `{value}`"))),
    }
}

fn number<T: std::str::FromStr>(line: usize, s: &str) -> Result<T, SpecError> {
    s.parse().map_err(|_| err(line, format!("`{s}` is not a number")))
}

fn boolean(line: usize, s: &str) -> Result<bool, SpecError> {
    match s {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(err(line, format!("`{s}` is not true or false"))),
    }
}

fn selector(line: usize, s: &str) -> Result<Selector, SpecError> {
    match s {
        "z" => Ok(Selector::Power(1)),
        _ => match (s.strip_prefix("z^"), s.strip_prefix('x')) {
            (Some(k), _) => Ok(Selector::Power(number(line, k)?)),
            (_, Some(k)) => Ok(Selector::Element(number(line, k)?)),
            _ => Err(err(line, format!("unknown central selector `{s}`"))),
        },
    }
}

impl GroupSpecFile {
    pub fn read(path: &Path) -> Result<Self, SpecError> {
        let text = std::fs::read_to_string(path).map_err(|e| err(0, format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let mut spec = GroupSpecFile::default();
        let mut section = Section::None;
        let mut factor_open: Option<usize> = None;
        let mut pending: Option<PendingAmalgamation> = None;
        let finish_factor = |open: &mut Option<usize>, spec: &GroupSpecFile| -> Result<(), SpecError> {
            match open.take() {
                Some(line) => Err(err(line, format!("factor section without an entry ({} factors so far)", spec.factors.len()))),
                None => Ok(()),
            }
        };
        let finish_amalgamation = |p: Option<PendingAmalgamation>, spec: &mut GroupSpecFile| -> Result<(), SpecError> {
            if let Some(p) = p {
                match (p.factors, p.elements) {
                    (Some(factors), Some(elements)) => spec.amalgamations.push(AmalgamateEntry { factors, elements }),
                    (Some(factors), None) => spec.amalgamations.push(AmalgamateEntry {
                        factors,
                        elements: (Selector::Power(1), Selector::Power(1)),
                    }),
                    _ => return Err(err(p.line, "amalgamate section needs `factors`")),
                }
            }
            Ok(())
        };
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(name) = content.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                finish_factor(&mut factor_open, &spec)?;
                finish_amalgamation(pending.take(), &mut spec)?;
                section = match name.trim() {
                    "factor" => {
                        factor_open = Some(line);
                        Section::Factor
                    }
                    "amalgamate" => {
                        pending = Some(PendingAmalgamation { line, ..Default::default() });
                        Section::Amalgamate
                    }
                    "analysis" => Section::Analysis,
                    other => return Err(err(line, format!("unknown section `[{other}]`"))),
                };
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| err(line, format!("expected `key = value`, got `{content}`")))?;
            match section {
                Section::None => return Err(err(line, "entry outside any section")),
                Section::Factor => {
                    if factor_open.is_none() {
                        return Err(err(line, "factor section already has an entry"));
                    }
                    let entry = match key {
                        "name" => FactorEntry::Builtin(value.parse().map_err(|e: semihol_core::Error| err(line, e.to_string()))?),
                        "special_linear" => {
                            let (d, q) = pair(line, value)?;
                            FactorEntry::SpecialLinear { dim: number(line, d)?, q: number(line, q)? }
                        }
                        other => return Err(err(line, format!("unknown factor key `{other}`"))),
                    };
                    spec.factors.push(entry);
                    factor_open = None;
                }
                Section::Amalgamate => {
                    let p = pending.as_mut().expect("open amalgamate section");
                    match key {
                        "factors" => {
                            let (a, b) = pair(line, value)?;
                            let (a, b): (usize, usize) = (number(line, a)?, number(line, b)?);
                            if a == 0 || b == 0 {
                                return Err(err(line, "factor indices are 1-based"));
                            }
                            p.factors = Some((a - 1, b - 1));
                        }
                        "elements" => {
                            let (a, b) = pair(line, value)?;
                            p.elements = Some((selector(line, a)?, selector(line, b)?));
                        }
                        other => return Err(err(line, format!("unknown amalgamate key `{other}`"))),
                    }
                }
                Section::Analysis => match key {
                    "oracle" => spec.analysis.oracle = boolean(line, value)?,
                    "identities" => spec.analysis.identities = boolean(line, value)?,
                    "seed" => spec.analysis.seed = number(line, value)?,
                    "guard" => spec.analysis.guard = Some(number(line, value)?),
                    other => return Err(err(line, format!("unknown analysis key `{other}`"))),
                },
            }
        }
        finish_factor(&mut factor_open, &spec)?;
        finish_amalgamation(pending.take(), &mut spec)?;
        if spec.factors.is_empty() {
            return Err(err(0, "no [factor] sections"));
        }
        for a in &spec.amalgamations {
            if a.factors.0 >= spec.factors.len() || a.factors.1 >= spec.factors.len() {
                return Err(err(0, format!("amalgamation refers to factor {} of {}", a.factors.0.max(a.factors.1) + 1, spec.factors.len())));
            }
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_amalgamated_spec() {
        let spec = GroupSpecFile::parse(
            "[factor]\nname = SL2_5\n[factor]\nspecial_linear = 2, 7 # comment\n[amalgamate]\nfactors = 1, 2\nelements = z, z^1\n[analysis]\noracle = true\n",
        )
        .unwrap();
        assert_eq!(spec.factors.len(), 2);
        assert_eq!(spec.factors[1], FactorEntry::SpecialLinear { dim: 2, q: 7 });
        assert_eq!(spec.amalgamations[0].factors, (0, 1));
        assert!(spec.analysis.oracle);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(GroupSpecFile::parse("[factor]\nname = SL3_3\n").unwrap_err().line, 2);
        assert!(GroupSpecFile::parse("[factor]\n").is_err());
        assert!(GroupSpecFile::parse("[widget]\n").is_err());
        assert!(GroupSpecFile::parse("[factor]\nname = SL2_5\n[amalgamate]\nfactors = 1, 3\n").is_err());
        assert!(GroupSpecFile::parse("[factor]\nname = SL2_5\n[amalgamate]\nfactors = 1, 1\nelements = y, z\n").is_err());
    }
}
