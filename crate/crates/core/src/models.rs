//! Uniform dispatch surface over every generative model in the crate, used
//! by the comparison machinery and the command line.

use std::collections::BTreeMap;
use std::fmt;

use crate::dist::{DistError, Distribution};
use crate::gaussian::{self, GaussianError, QModelParams, TwinParams};
use crate::generators::{self, GeneratorError, MonkeyParams, TalentBinaryParams, UrnState};
use crate::point_process::{self, EventTimeline, PointProcessError, PointProcessParams};
use crate::rng::RngStream;
use crate::sequence::SequenceSample;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("unknown model '{0}'")]
    UnknownModel(String),
    #[error("model '{model}' does not accept key '{key}'")]
    UnknownKey { model: &'static str, key: String },
    #[error("model '{model}' requires key '{key}'")]
    MissingKey { model: &'static str, key: &'static str },
    #[error("invalid value '{value}' for '{key}': {reason}")]
    BadValue { key: String, value: String, reason: String },
    #[error("unknown distribution '{0}'")]
    UnknownDistribution(String),
    #[error("'{0}' generates event timelines, not sequences")]
    NotASequenceModel(&'static str),
    #[error("'{0}' generates sequences, not event timelines")]
    NotATimelineModel(&'static str),
    #[error(transparent)]
    Distribution(#[from] DistError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Gaussian(#[from] GaussianError),
    #[error(transparent)]
    PointProcess(#[from] PointProcessError),
}

/// A named model together with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    PolyaBinary,
    TalentBinary { talent: Distribution },
    IidBernoulli { p: f64 },
    Price,
    Simon { alpha: f64, n_r0: u32, k0: u32 },
    BaDegree { m0: u32, t_entry: u32 },
    Gibrat { y0: f64, growth: Distribution },
    GibratUniform { y0: f64, lo: f64, hi: f64 },
    Monkey { space_prob: f64, alphabet_size: u32, max_length: u32, word_length: u32 },
    MulticolorUrn { counts: Vec<f64>, reinforcement: Vec<f64> },
    QModel { mu_t: f64, sigma_t: f64, sigma_x: f64 },
    GaussianTwin { a: f64, b: f64, c: f64 },
    ContagiousPoisson { alpha: f64, beta: f64, horizon: f64 },
    MixedPoisson { alpha: f64, beta: f64, horizon: f64 },
}

impl GeneratorSpec {
    pub fn model_id(&self) -> &'static str {
        match self {
            GeneratorSpec::PolyaBinary => "polya-binary",
            GeneratorSpec::TalentBinary { .. } => "talent-binary",
            GeneratorSpec::IidBernoulli { .. } => "iid-bernoulli",
            GeneratorSpec::Price => "price",
            GeneratorSpec::Simon { .. } => "simon",
            GeneratorSpec::BaDegree { .. } => "ba-degree",
            GeneratorSpec::Gibrat { .. } => "gibrat",
            GeneratorSpec::GibratUniform { .. } => "gibrat-uniform",
            GeneratorSpec::Monkey { .. } => "monkey",
            GeneratorSpec::MulticolorUrn { .. } => "multicolor-urn",
            GeneratorSpec::QModel { .. } => "q-model",
            GeneratorSpec::GaussianTwin { .. } => "gaussian-twin",
            GeneratorSpec::ContagiousPoisson { .. } => "contagious-poisson",
            GeneratorSpec::MixedPoisson { .. } => "mixed-poisson",
        }
    }

    /// Whether the model produces event timelines rather than sequences.
    pub fn is_timeline(&self) -> bool {
        matches!(
            self,
            GeneratorSpec::ContagiousPoisson { .. } | GeneratorSpec::MixedPoisson { .. }
        )
    }

    /// Check all parameter preconditions without sampling.
    pub fn validate(&self) -> Result<(), ModelError> {
        match self {
            GeneratorSpec::PolyaBinary | GeneratorSpec::Price => Ok(()),
            GeneratorSpec::TalentBinary { talent } => {
                TalentBinaryParams::new(talent.clone())?;
                Ok(())
            }
            GeneratorSpec::IidBernoulli { p } => {
                Distribution::bernoulli(*p)?;
                Ok(())
            }
            GeneratorSpec::Simon { alpha, n_r0, k0 } => {
                let mut probe = RngStream::new(0);
                generators::simon_occurrence_sequence(*alpha, *n_r0, *k0, 0, &mut probe)?;
                Ok(())
            }
            GeneratorSpec::BaDegree { m0, t_entry } => {
                let mut probe = RngStream::new(0);
                generators::ba_degree_sequence(*m0, *t_entry, *t_entry, &mut probe)?;
                Ok(())
            }
            GeneratorSpec::Gibrat { y0, growth } => {
                let mut probe = RngStream::new(0);
                generators::gibrat_sequence(*y0, growth, 0, &mut probe)?;
                Ok(())
            }
            GeneratorSpec::GibratUniform { y0, lo, hi } => {
                if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
                    return Err(ModelError::BadValue {
                        key: "lo/hi".into(),
                        value: format!("{lo}/{hi}"),
                        reason: "growth bounds must be finite with lo <= hi".into(),
                    });
                }
                let mut probe = RngStream::new(0);
                generators::gibrat_sequence_from_quantile(
                    *y0,
                    |u| lo + (hi - lo) * u,
                    0,
                    &mut probe,
                )?;
                Ok(())
            }
            GeneratorSpec::Monkey { space_prob, alphabet_size, max_length, word_length } => {
                MonkeyParams::new(*space_prob, *alphabet_size, *max_length)?
                    .word_probability(*word_length)?;
                Ok(())
            }
            GeneratorSpec::MulticolorUrn { counts, reinforcement } => {
                UrnState::new(counts.clone(), reinforcement.clone())?;
                Ok(())
            }
            GeneratorSpec::QModel { mu_t, sigma_t, sigma_x } => {
                QModelParams::new(*mu_t, *sigma_t, *sigma_x)?;
                Ok(())
            }
            GeneratorSpec::GaussianTwin { a, b, c } => {
                TwinParams::new(*a, *b, *c)?;
                Ok(())
            }
            GeneratorSpec::ContagiousPoisson { alpha, beta, horizon }
            | GeneratorSpec::MixedPoisson { alpha, beta, horizon } => {
                PointProcessParams::new(*alpha, *beta, *horizon)?;
                Ok(())
            }
        }
    }

    /// Sample one length-`m` realization. Fails for timeline models.
    pub fn sample_sequence(
        &self,
        m: usize,
        rng: &mut RngStream,
    ) -> Result<SequenceSample, ModelError> {
        match self {
            GeneratorSpec::PolyaBinary => Ok(generators::polya_binary_sequence(m, rng)),
            GeneratorSpec::TalentBinary { talent } => {
                let params = TalentBinaryParams::new(talent.clone())?;
                Ok(generators::talent_binary_sequence(&params, m, rng))
            }
            GeneratorSpec::IidBernoulli { p } => {
                Distribution::bernoulli(*p)?;
                Ok(generators::iid_bernoulli_sequence(*p, m, rng))
            }
            GeneratorSpec::Price => Ok(generators::price_sequence(m, rng)),
            GeneratorSpec::Simon { alpha, n_r0, k0 } => {
                Ok(generators::simon_occurrence_sequence(*alpha, *n_r0, *k0, m, rng)?)
            }
            GeneratorSpec::BaDegree { m0, t_entry } => {
                let t_end = (*t_entry).max(m as u32);
                let full = generators::ba_degree_sequence(*m0, *t_entry, t_end, rng)?;
                let values = full.as_integer().expect("integer degrees")[..m].to_vec();
                Ok(SequenceSample::integer("ba-degree", values))
            }
            GeneratorSpec::Gibrat { y0, growth } => {
                Ok(generators::gibrat_sequence(*y0, growth, m, rng)?)
            }
            GeneratorSpec::GibratUniform { y0, lo, hi } => {
                self.validate()?;
                Ok(generators::gibrat_sequence_from_quantile(
                    *y0,
                    |u| lo + (hi - lo) * u,
                    m,
                    rng,
                )?)
            }
            GeneratorSpec::Monkey { space_prob, alphabet_size, max_length, word_length } => {
                let params = MonkeyParams::new(*space_prob, *alphabet_size, *max_length)?;
                Ok(generators::monkey_occurrence_sequence(&params, *word_length, m, rng)?)
            }
            GeneratorSpec::MulticolorUrn { counts, reinforcement } => {
                let state = UrnState::new(counts.clone(), reinforcement.clone())?;
                Ok(generators::multicolor_urn_sequence(&state, m, rng))
            }
            GeneratorSpec::QModel { mu_t, sigma_t, sigma_x } => {
                let params = QModelParams::new(*mu_t, *sigma_t, *sigma_x)?;
                Ok(gaussian::q_model_sequence(&params, m, rng))
            }
            GeneratorSpec::GaussianTwin { a, b, c } => {
                let params = TwinParams::new(*a, *b, *c)?;
                Ok(gaussian::twin_sequence(&params, m, rng))
            }
            GeneratorSpec::ContagiousPoisson { .. } | GeneratorSpec::MixedPoisson { .. } => {
                Err(ModelError::NotASequenceModel(self.model_id()))
            }
        }
    }

    /// Sample one event timeline. Fails for sequence models.
    pub fn sample_timeline(&self, rng: &mut RngStream) -> Result<EventTimeline, ModelError> {
        match self {
            GeneratorSpec::ContagiousPoisson { alpha, beta, horizon } => {
                let params = PointProcessParams::new(*alpha, *beta, *horizon)?;
                Ok(point_process::contagious_poisson(&params, rng)?)
            }
            GeneratorSpec::MixedPoisson { alpha, beta, horizon } => {
                let params = PointProcessParams::new(*alpha, *beta, *horizon)?;
                Ok(point_process::mixed_poisson_twin(&params, rng)?)
            }
            _ => Err(ModelError::NotATimelineModel(self.model_id())),
        }
    }

    /// Parse `"name"` or `"name key=value,key=value"` (a `:` also separates
    /// name and parameters).
    pub fn parse(text: &str) -> Result<Self, ModelError> {
        let trimmed = text.trim();
        let (name, rest) = match trimmed.find([' ', ':']) {
            Some(pos) => (&trimmed[..pos], trimmed[pos + 1..].trim()),
            None => (trimmed, ""),
        };
        let mut params = BTreeMap::new();
        if !rest.is_empty() {
            for pair in rest.split(',') {
                let (k, v) = pair.split_once('=').ok_or_else(|| ModelError::BadValue {
                    key: pair.to_string(),
                    value: String::new(),
                    reason: "expected key=value".into(),
                })?;
                params.insert(k.trim().to_string(), v.trim().to_string());
            }
        }
        Self::from_parts(name, &params)
    }

    /// Build from a model name and a key-value map (the config-file form).
    pub fn from_parts(
        name: &str,
        params: &BTreeMap<String, String>,
    ) -> Result<Self, ModelError> {
        let mut reader = ParamReader::new(name, params);
        let spec = match name {
            "polya-binary" => GeneratorSpec::PolyaBinary,
            "talent-uniform" => GeneratorSpec::TalentBinary { talent: Distribution::uniform01() },
            "talent-binary" => {
                GeneratorSpec::TalentBinary { talent: reader.dist("talent")? }
            }
            "iid-bernoulli" => GeneratorSpec::IidBernoulli { p: reader.real("p")? },
            "price" => GeneratorSpec::Price,
            "simon" => GeneratorSpec::Simon {
                alpha: reader.real("alpha")?,
                n_r0: reader.integer("n_r0")?,
                k0: reader.integer("k0")?,
            },
            "ba-degree" => GeneratorSpec::BaDegree {
                m0: reader.integer("m0")?,
                t_entry: reader.integer("t_entry")?,
            },
            "gibrat" => GeneratorSpec::Gibrat {
                y0: reader.real("y0")?,
                growth: reader.dist("growth")?,
            },
            "gibrat-uniform" => GeneratorSpec::GibratUniform {
                y0: reader.real("y0")?,
                lo: reader.real("lo")?,
                hi: reader.real("hi")?,
            },
            "monkey" => GeneratorSpec::Monkey {
                space_prob: reader.real("alpha")?,
                alphabet_size: reader.integer("n")?,
                max_length: reader.integer("max_k")?,
                word_length: reader.integer("k")?,
            },
            "multicolor-urn" => GeneratorSpec::MulticolorUrn {
                counts: reader.reals("counts")?,
                reinforcement: reader.reals("reinforcement")?,
            },
            "q-model" => GeneratorSpec::QModel {
                mu_t: reader.real_aliased(&["mu", "mu_t"])?,
                sigma_t: reader.real_aliased(&["sigmaT", "sigma_t"])?,
                sigma_x: reader.real_aliased(&["sigmaX", "sigma_x"])?,
            },
            "gaussian-twin" => GeneratorSpec::GaussianTwin {
                a: reader.real("a")?,
                b: reader.real("b")?,
                c: reader.real("c")?,
            },
            "contagious-poisson" => GeneratorSpec::ContagiousPoisson {
                alpha: reader.real("alpha")?,
                beta: reader.real("beta")?,
                horizon: reader.real("horizon")?,
            },
            "mixed-poisson" => GeneratorSpec::MixedPoisson {
                alpha: reader.real("alpha")?,
                beta: reader.real("beta")?,
                horizon: reader.real("horizon")?,
            },
            other => return Err(ModelError::UnknownModel(other.to_string())),
        };
        reader.finish()?;
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.model_id())?;
        match self {
            GeneratorSpec::PolyaBinary | GeneratorSpec::Price => Ok(()),
            GeneratorSpec::TalentBinary { talent } => write!(f, " talent={}", dist_text(talent)),
            GeneratorSpec::IidBernoulli { p } => write!(f, " p={p}"),
            GeneratorSpec::Simon { alpha, n_r0, k0 } => {
                write!(f, " alpha={alpha},n_r0={n_r0},k0={k0}")
            }
            GeneratorSpec::BaDegree { m0, t_entry } => write!(f, " m0={m0},t_entry={t_entry}"),
            GeneratorSpec::Gibrat { y0, growth } => {
                write!(f, " y0={y0},growth={}", dist_text(growth))
            }
            GeneratorSpec::GibratUniform { y0, lo, hi } => write!(f, " y0={y0},lo={lo},hi={hi}"),
            GeneratorSpec::Monkey { space_prob, alphabet_size, max_length, word_length } => {
                write!(f, " alpha={space_prob},n={alphabet_size},max_k={max_length},k={word_length}")
            }
            GeneratorSpec::MulticolorUrn { counts, reinforcement } => {
                write!(f, " counts={},reinforcement={}", join_reals(counts), join_reals(reinforcement))
            }
            GeneratorSpec::QModel { mu_t, sigma_t, sigma_x } => {
                write!(f, " mu={mu_t},sigmaT={sigma_t},sigmaX={sigma_x}")
            }
            GeneratorSpec::GaussianTwin { a, b, c } => write!(f, " a={a},b={b},c={c}"),
            GeneratorSpec::ContagiousPoisson { alpha, beta, horizon }
            | GeneratorSpec::MixedPoisson { alpha, beta, horizon } => {
                write!(f, " alpha={alpha},beta={beta},horizon={horizon}")
            }
        }
    }
}

fn join_reals(values: &[f64]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("|")
}

fn dist_text(dist: &Distribution) -> String {
    match dist {
        Distribution::Uniform01 => "uniform01".to_string(),
        Distribution::Normal { mean, variance } => format!("normal({mean}|{variance})"),
        Distribution::LogNormal { log_mean, log_variance } => {
            format!("lognormal({log_mean}|{log_variance})")
        }
        Distribution::Gamma { shape, scale } => format!("gamma({shape}|{scale})"),
        Distribution::Exponential { rate } => format!("exp({rate})"),
        Distribution::Bernoulli { p } => format!("bernoulli({p})"),
        Distribution::Discrete { weights } => format!("discrete({})", join_reals(weights)),
    }
}

/// Parse a distribution literal such as `normal(0|1)` or `uniform01`.
pub fn parse_distribution(text: &str) -> Result<Distribution, ModelError> {
    let trimmed = text.trim();
    let (name, args) = match trimmed.split_once('(') {
        Some((name, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(|| {
                ModelError::UnknownDistribution(trimmed.to_string())
            })?;
            let args: Vec<f64> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split('|')
                    .map(|a| {
                        a.trim().parse::<f64>().map_err(|e| ModelError::BadValue {
                            key: name.to_string(),
                            value: a.to_string(),
                            reason: e.to_string(),
                        })
                    })
                    .collect::<Result<_, _>>()?
            };
            (name.trim(), args)
        }
        None => (trimmed, Vec::new()),
    };
    let arity = |want: usize, args: &[f64]| -> Result<(), ModelError> {
        if args.len() == want {
            Ok(())
        } else {
            Err(ModelError::BadValue {
                key: name.to_string(),
                value: text.to_string(),
                reason: format!("expected {want} arguments, got {}", args.len()),
            })
        }
    };
    let dist = match name {
        "uniform01" => {
            arity(0, &args)?;
            Distribution::uniform01()
        }
        "normal" => {
            arity(2, &args)?;
            Distribution::normal(args[0], args[1])?
        }
        "lognormal" => {
            arity(2, &args)?;
            Distribution::log_normal(args[0], args[1])?
        }
        "gamma" => {
            arity(2, &args)?;
            Distribution::gamma(args[0], args[1])?
        }
        "exp" => {
            arity(1, &args)?;
            Distribution::exponential(args[0])?
        }
        "bernoulli" => {
            arity(1, &args)?;
            Distribution::bernoulli(args[0])?
        }
        "discrete" => Distribution::discrete(args)?,
        other => return Err(ModelError::UnknownDistribution(other.to_string())),
    };
    Ok(dist)
}

struct ParamReader<'a> {
    model: &'static str,
    params: &'a BTreeMap<String, String>,
    consumed: Vec<&'a str>,
}

impl<'a> ParamReader<'a> {
    fn new(model: &str, params: &'a BTreeMap<String, String>) -> Self {
        // leak-free static mapping: model names are the fixed set above
        let model = match model {
            "talent-binary" => "talent-binary",
            "iid-bernoulli" => "iid-bernoulli",
            "simon" => "simon",
            "ba-degree" => "ba-degree",
            "gibrat" => "gibrat",
            "gibrat-uniform" => "gibrat-uniform",
            "monkey" => "monkey",
            "multicolor-urn" => "multicolor-urn",
            "q-model" => "q-model",
            "gaussian-twin" => "gaussian-twin",
            "contagious-poisson" => "contagious-poisson",
            "mixed-poisson" => "mixed-poisson",
            _ => "model",
        };
        Self { model, params, consumed: Vec::new() }
    }

    fn raw(&mut self, key: &str) -> Option<&'a str> {
        let (k, v) = self.params.get_key_value(key)?;
        self.consumed.push(k.as_str());
        Some(v.as_str())
    }

    fn real(&mut self, key: &'static str) -> Result<f64, ModelError> {
        let raw = self.raw(key).ok_or(ModelError::MissingKey { model: self.model, key })?;
        raw.parse::<f64>().map_err(|e| ModelError::BadValue {
            key: key.to_string(),
            value: raw.to_string(),
            reason: e.to_string(),
        })
    }

    fn real_aliased(&mut self, keys: &[&'static str]) -> Result<f64, ModelError> {
        for key in keys {
            if self.params.contains_key(*key) {
                return self.real(key);
            }
        }
        Err(ModelError::MissingKey { model: self.model, key: keys[0] })
    }

    fn integer(&mut self, key: &'static str) -> Result<u32, ModelError> {
        let raw = self.raw(key).ok_or(ModelError::MissingKey { model: self.model, key })?;
        raw.parse::<u32>().map_err(|e| ModelError::BadValue {
            key: key.to_string(),
            value: raw.to_string(),
            reason: e.to_string(),
        })
    }

    fn reals(&mut self, key: &'static str) -> Result<Vec<f64>, ModelError> {
        let raw = self.raw(key).ok_or(ModelError::MissingKey { model: self.model, key })?;
        raw.split('|')
            .map(|v| {
                v.trim().parse::<f64>().map_err(|e| ModelError::BadValue {
                    key: key.to_string(),
                    value: v.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect()
    }

    fn dist(&mut self, key: &'static str) -> Result<Distribution, ModelError> {
        let raw = self.raw(key).ok_or(ModelError::MissingKey { model: self.model, key })?;
        parse_distribution(raw)
    }

    fn finish(self) -> Result<(), ModelError> {
        for key in self.params.keys() {
            if !self.consumed.contains(&key.as_str()) {
                return Err(ModelError::UnknownKey { model: self.model, key: key.clone() });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_bare_and_parameterized() {
        assert_eq!(GeneratorSpec::parse("polya-binary").unwrap(), GeneratorSpec::PolyaBinary);
        let spec = GeneratorSpec::parse("contagious-poisson alpha=1,beta=0.5,horizon=1").unwrap();
        assert_eq!(
            spec,
            GeneratorSpec::ContagiousPoisson { alpha: 1.0, beta: 0.5, horizon: 1.0 }
        );
        let spec = GeneratorSpec::parse("q-model mu=0,sigmaT=1,sigmaX=1").unwrap();
        assert_eq!(spec, GeneratorSpec::QModel { mu_t: 0.0, sigma_t: 1.0, sigma_x: 1.0 });
    }

    #[test]
    fn parse_colon_separator_and_dist() {
        let spec = GeneratorSpec::parse("gibrat:y0=1,growth=exp(2)").unwrap();
        assert_eq!(
            spec,
            GeneratorSpec::Gibrat { y0: 1.0, growth: Distribution::exponential(2.0).unwrap() }
        );
    }

    #[test]
    fn unknown_model_and_key_errors() {
        assert!(matches!(
            GeneratorSpec::parse("zipf"),
            Err(ModelError::UnknownModel(name)) if name == "zipf"
        ));
        assert!(matches!(
            GeneratorSpec::parse("q-model mu=0,sigmaT=1,sigmaX=1,sigmaZ=2"),
            Err(ModelError::UnknownKey { key, .. }) if key == "sigmaZ"
        ));
        assert!(matches!(
            GeneratorSpec::parse("q-model mu=0,sigmaT=1"),
            Err(ModelError::MissingKey { key: "sigmaX", .. })
        ));
    }

    #[test]
    fn invalid_parameters_rejected_at_parse() {
        assert!(GeneratorSpec::parse("q-model mu=0,sigmaT=0,sigmaX=1").is_err());
        assert!(GeneratorSpec::parse("iid-bernoulli p=1.5").is_err());
        assert!(GeneratorSpec::parse("gibrat y0=1,growth=normal(0|1)").is_err());
    }

    #[test]
    fn sequence_timeline_split() {
        let mut rng = RngStream::new(0);
        let polya = GeneratorSpec::PolyaBinary;
        assert!(polya.sample_sequence(3, &mut rng).is_ok());
        assert!(polya.sample_timeline(&mut rng).is_err());
        let pp = GeneratorSpec::parse("mixed-poisson alpha=1,beta=0.5,horizon=1").unwrap();
        assert!(pp.sample_timeline(&mut rng).is_ok());
        assert!(pp.sample_sequence(3, &mut rng).is_err());
    }

    #[test]
    fn display_round_trips_through_parse() {
        let specs = [
            "polya-binary",
            "talent-binary talent=bernoulli(0.25)",
            "simon alpha=0.5,n_r0=1,k0=2",
            "q-model mu=2,sigmaT=0.5,sigmaX=1",
            "gibrat-uniform y0=1,lo=0,hi=0.2",
            "multicolor-urn counts=1|1|1,reinforcement=1|1|2",
        ];
        for text in specs {
            let spec = GeneratorSpec::parse(text).unwrap();
            let round = GeneratorSpec::parse(&spec.to_string()).unwrap();
            assert_eq!(spec, round, "{text}");
        }
    }

    #[test]
    fn ba_degree_sequence_truncates_to_length() {
        let spec = GeneratorSpec::BaDegree { m0: 1, t_entry: 1 };
        let mut rng = RngStream::new(1);
        let s = spec.sample_sequence(4, &mut rng).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.as_integer().unwrap()[0], 1);
    }
}
