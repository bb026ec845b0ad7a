//! The report emitted by every subcommand: one struct that renders either as
//! deterministic human-readable text or as a single JSON document
//! (`--json-style`), and that round-trips losslessly through JSON.

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct Report {
    /// Canonical subcommand, e.g. "factor" or "ideal mul".
    pub command: String,
    /// Raw arguments as given on the command line.
    pub inputs: Vec<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub result: Option<ResultBody>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<ErrorBody>,
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ErrorBody {
    /// "parse", "domain", "capacity" or "mismatch"; determines the exit code.
    pub kind: String,
    pub message: String,
}

// externally tagged: the result object has exactly one key naming the
// variant, e.g. {"factor": {...}}. (internal tagging would break i128
// fields, which serde buffers through a representation without i128.)
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum ResultBody {
    Factor {
        element: String,
        norm: i128,
        irreducible: bool,
        certificate: Certificate,
        length: u64,
        count: u64,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        factorizations: Option<Vec<FactorizationBody>>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        oracle: Option<OracleBody>,
    },
    IdealNorm {
        ideal: String,
        norm: i128,
    },
    IdealMul {
        left: String,
        right: String,
        product: String,
    },
    IdealDivide {
        left: String,
        right: String,
        quotient: String,
    },
    IdealClass {
        ideal: String,
        class: String,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        generator: Option<String>,
    },
    IdealFactor {
        ideal: String,
        factors: Vec<PrimeFactorBody>,
    },
    IdealInverse {
        ideal: String,
        conjugate: String,
        f: i128,
        product: String,
    },
    Prime {
        p: i128,
        classification: String,
        factors: Vec<PrimeFactorBody>,
    },
    Hilbert {
        n: u64,
        irreducible: bool,
        length: u64,
        count: u64,
        factorizations: Vec<Vec<u64>>,
    },
    Selftest {
        bound: i128,
        suites: Vec<SuiteBody>,
        all_passed: bool,
    },
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Zero,
    Unit,
    PrimeElement { prime_ideal: String },
    TwoNonprincipal { prime_ideals: [String; 2] },
    Reducible { witness: [String; 2] },
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct FactorizationBody {
    pub unit: i8,
    pub factors: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct OracleBody {
    pub bound: i128,
    pub count: u64,
    pub agrees: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct PrimeFactorBody {
    pub ideal: String,
    pub exponent: u32,
    pub class: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct SuiteBody {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
}

impl Report {
    pub fn ok(command: &str, inputs: Vec<String>, result: ResultBody) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            status: Status::Ok,
            result: Some(result),
            error: None,
        }
    }

    pub fn error(command: &str, inputs: Vec<String>, kind: &str, message: String) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            status: Status::Error,
            result: None,
            error: Some(ErrorBody { kind: kind.to_string(), message }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Human-readable rendering; the error line goes to stderr by the caller.
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let Some(result) = &self.result else {
            return out;
        };
        match result {
            ResultBody::Factor {
                element,
                norm,
                irreducible,
                certificate,
                length,
                count,
                factorizations,
                oracle,
            } => {
                line(&mut out, &format!("element: {element}"));
                line(&mut out, &format!("norm: {norm}"));
                line(&mut out, &format!("irreducible: {}", yes_no(*irreducible)));
                line(&mut out, &format!("certificate: {}", render_certificate(certificate)));
                line(&mut out, &format!("length: {length}"));
                line(&mut out, &format!("count: {count}"));
                if let Some(list) = factorizations {
                    line(&mut out, "factorizations:");
                    for f in list {
                        line(&mut out, &format!("  {}", render_factorization(f)));
                    }
                }
                if let Some(o) = oracle {
                    line(
                        &mut out,
                        &format!(
                            "oracle: {} ({} factorizations, bound {})",
                            if o.agrees { "agrees" } else { "MISMATCH" },
                            o.count,
                            o.bound
                        ),
                    );
                }
            }
            ResultBody::IdealNorm { ideal, norm } => {
                line(&mut out, &format!("ideal: {ideal}"));
                line(&mut out, &format!("norm: {norm}"));
            }
            ResultBody::IdealMul { left, right, product } => {
                line(&mut out, &format!("left: {left}"));
                line(&mut out, &format!("right: {right}"));
                line(&mut out, &format!("product: {product}"));
            }
            ResultBody::IdealDivide { left, right, quotient } => {
                line(&mut out, &format!("left: {left}"));
                line(&mut out, &format!("right: {right}"));
                line(&mut out, &format!("quotient: {quotient}"));
            }
            ResultBody::IdealClass { ideal, class, generator } => {
                line(&mut out, &format!("ideal: {ideal}"));
                line(&mut out, &format!("class: {class}"));
                if let Some(g) = generator {
                    line(&mut out, &format!("generator: {g}"));
                }
            }
            ResultBody::IdealFactor { ideal, factors } => {
                line(&mut out, &format!("ideal: {ideal}"));
                line(&mut out, "factors:");
                for f in factors {
                    line(&mut out, &format!("  {}^{} ({})", f.ideal, f.exponent, f.class));
                }
            }
            ResultBody::IdealInverse { ideal, conjugate, f, product } => {
                line(&mut out, &format!("ideal: {ideal}"));
                line(&mut out, &format!("conjugate: {conjugate}"));
                line(&mut out, &format!("f: {f}"));
                line(&mut out, &format!("product: {product}"));
            }
            ResultBody::Prime { p, classification, factors } => {
                line(&mut out, &format!("p: {p}"));
                line(&mut out, &format!("classification: {classification}"));
                line(&mut out, "factorization:");
                for f in factors {
                    line(&mut out, &format!("  {}^{} ({})", f.ideal, f.exponent, f.class));
                }
            }
            ResultBody::Hilbert { n, irreducible, length, count, factorizations } => {
                line(&mut out, &format!("n: {n}"));
                line(&mut out, &format!("irreducible: {}", yes_no(*irreducible)));
                line(&mut out, &format!("length: {length}"));
                line(&mut out, &format!("count: {count}"));
                line(&mut out, "factorizations:");
                for f in factorizations {
                    let rendered: Vec<String> = f.iter().map(|a| a.to_string()).collect();
                    line(&mut out, &format!("  {}", rendered.join(" * ")));
                }
            }
            ResultBody::Selftest { bound, suites, all_passed } => {
                line(&mut out, &format!("selftest with bound {bound}"));
                for s in suites {
                    if s.failed == 0 {
                        line(&mut out, &format!("  {}: PASS ({} checks)", s.name, s.passed));
                    } else {
                        line(
                            &mut out,
                            &format!(
                                "  {}: FAIL ({} of {} checks failed)",
                                s.name,
                                s.failed,
                                s.passed + s.failed
                            ),
                        );
                    }
                }
                line(
                    &mut out,
                    if *all_passed { "all suites passed" } else { "SOME SUITES FAILED" },
                );
            }
        }
        out
    }
}

fn line(out: &mut String, text: &str) {
    out.push_str(text);
    out.push('\n');
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_certificate(c: &Certificate) -> String {
    match c {
        Certificate::Zero => "zero".to_string(),
        Certificate::Unit => "unit".to_string(),
        Certificate::PrimeElement { prime_ideal } => {
            format!("prime element, <alpha> = {prime_ideal}")
        }
        Certificate::TwoNonprincipal { prime_ideals } => format!(
            "product of two nonprincipal prime ideals: {} * {}",
            prime_ideals[0], prime_ideals[1]
        ),
        Certificate::Reducible { witness } => {
            format!("reducible, witness ({}) * ({})", witness[0], witness[1])
        }
    }
}

fn render_factorization(f: &FactorizationBody) -> String {
    let mut parts: Vec<String> = Vec::new();
    if f.unit == -1 {
        parts.push("-1".to_string());
    }
    for factor in &f.factors {
        if factor.contains('+') || factor.contains("sqrt") {
            parts.push(format!("({factor})"));
        } else {
            parts.push(factor.clone());
        }
    }
    parts.join(" * ")
}
