//! Batch command-line front end for the quadring library.
//!
//! Every subcommand prints either deterministic human-readable text or, with
//! `--json-style`, a single JSON document on stdout. Exit codes: 0 ok,
//! 2 parse error, 3 domain error, 4 capacity exceeded, 5 oracle or selftest
//! mismatch.

mod report;

use quadring::class_group::{inverse_pair, is_principal, IdealClass};
use quadring::factorize::{
    brute_force_factorizations_with_bound, count_factorizations_with_bound,
    enumerate_factorizations_with_bound, factorization_length_with_bound,
    is_irreducible_with_bound, Factorization, IrreducibilityCertificate, DEFAULT_ORACLE_BOUND,
};
use quadring::hilbert::{self, HilbertElement};
use quadring::primes::{
    classify_prime, factor_ideal_with_bound, factor_rational_prime, PrimeFactorization,
    DEFAULT_FACTOR_BOUND,
};
use quadring::selftest;
use quadring::{Error, ErrorKind, QuadIdeal, QuadInt};
use report::{
    Certificate, FactorizationBody, OracleBody, PrimeFactorBody, Report, ResultBody, SuiteBody,
};

const USAGE: &str = "\
quadring - exact arithmetic and factorization in Z[sqrt(-5)]

USAGE:
    quadring <command> [args] [flags]

COMMANDS:
    factor <element>               certificate, length, count and all irreducible factorizations
    ideal norm <ideal>             canonical HNF basis and norm
    ideal mul <ideal> <ideal>      product ideal
    ideal divide <ideal> <ideal>   exact quotient, or a domain error when not divisible
    ideal class <ideal>            principal or non-principal, with generator when principal
    ideal factor <ideal>           prime-ideal factorization with exponents and classes
    ideal inverse <ideal>          conjugate ideal J and f > 0 with I*J = <f>
    prime <p>                      inert/ramified/split classification and factorization of <p>
    hilbert <n>                    factorizations of n in the Hilbert monoid {1+4k}
    selftest <bound>               run all invariant sweeps up to a norm bound

FLAGS:
    --d <int>       ring parameter for the lattice-only subcommands (default -5)
    --count-only    factor: suppress the factorization list
    --oracle        factor: cross-check against the brute-force divisor oracle
    --bound <int>   override the factoring bound (default 10^8) and, with
                    --oracle, the oracle bound (default 10^6)
    --json-style    emit one machine-readable JSON document on stdout

EXIT CODES:
    0 ok   2 parse error   3 domain error   4 capacity exceeded   5 mismatch

TEXT FORMS:
    element  \"a+b*sqrt(d)\"             e.g. \"6\", \"1+1*sqrt(-5)\", \"sqrt(-5)\"
    ideal    generator list \"(g, ...)\"  e.g. \"(2, 1+1*sqrt(-5))\"
";

struct Options {
    positionals: Vec<String>,
    d: i128,
    bound: Option<i128>,
    count_only: bool,
    oracle: bool,
    json: bool,
}

fn parse_flags(args: &[String]) -> Result<Options, String> {
    let mut options = Options {
        positionals: Vec::new(),
        d: -5,
        bound: None,
        count_only: false,
        oracle: false,
        json: false,
    };
    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        match arg.as_str() {
            "--count-only" => options.count_only = true,
            "--oracle" => options.oracle = true,
            "--json-style" => options.json = true,
            "--d" => {
                let value = iter.next().ok_or("--d requires an integer argument")?;
                options.d = value.parse().map_err(|_| format!("invalid --d value '{value}'"))?;
            }
            "--bound" => {
                let value = iter.next().ok_or("--bound requires an integer argument")?;
                let bound: i128 =
                    value.parse().map_err(|_| format!("invalid --bound value '{value}'"))?;
                if bound <= 0 {
                    return Err("--bound must be positive".to_string());
                }
                options.bound = Some(bound);
            }
            flag if flag.starts_with("--") => return Err(format!("unknown flag '{flag}'")),
            positional => options.positionals.push(positional.to_string()),
        }
    }
    Ok(options)
}

fn exit_code(error: &Error) -> i32 {
    match error.kind() {
        ErrorKind::Parse => 2,
        ErrorKind::Domain => 3,
        ErrorKind::Capacity => 4,
    }
}

fn error_kind_name(error: &Error) -> &'static str {
    match error.kind() {
        ErrorKind::Parse => "parse",
        ErrorKind::Domain => "domain",
        ErrorKind::Capacity => "capacity",
    }
}

/// Parses an ideal given as a generator list "(g1, g2, ...)"; brackets and a
/// bare single element are accepted too.
fn parse_ideal(text: &str, default_d: i128) -> Result<QuadIdeal, Error> {
    let trimmed = text.trim();
    let inner = if (trimmed.starts_with('(') && trimmed.ends_with(')'))
        || (trimmed.starts_with('[') && trimmed.ends_with(']'))
    {
        &trimmed[1..trimmed.len() - 1]
    } else {
        trimmed
    };
    let mut generators = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for ch in inner.chars() {
        match ch {
            '(' | '[' => {
                depth += 1;
                current.push(ch);
            }
            ')' | ']' => {
                depth -= 1;
                current.push(ch);
            }
            ',' if depth == 0 => {
                generators.push(std::mem::take(&mut current));
            }
            _ => current.push(ch),
        }
    }
    generators.push(current);
    let elements = generators
        .iter()
        .map(|g| QuadInt::parse(g, default_d))
        .collect::<Result<Vec<_>, _>>()?;
    QuadIdeal::from_generators(&elements)
}

fn certificate_body(cert: &IrreducibilityCertificate) -> Certificate {
    match cert {
        IrreducibilityCertificate::Zero => Certificate::Zero,
        IrreducibilityCertificate::Unit => Certificate::Unit,
        IrreducibilityCertificate::PrimeElement(p) => {
            Certificate::PrimeElement { prime_ideal: p.to_string() }
        }
        IrreducibilityCertificate::TwoNonprincipal(p1, p2) => {
            Certificate::TwoNonprincipal { prime_ideals: [p1.to_string(), p2.to_string()] }
        }
        IrreducibilityCertificate::Reducible(x, y) => {
            Certificate::Reducible { witness: [x.to_string(), y.to_string()] }
        }
    }
}

fn factorization_body(f: &Factorization) -> FactorizationBody {
    FactorizationBody {
        unit: f.unit(),
        factors: f.factors().iter().map(|x| x.to_string()).collect(),
    }
}

fn prime_factor_bodies(pf: &PrimeFactorization) -> Vec<PrimeFactorBody> {
    pf.factors()
        .iter()
        .map(|f| PrimeFactorBody {
            ideal: f.ideal.to_string(),
            exponent: f.exponent,
            class: f.class.to_string(),
        })
        .collect()
}

fn cmd_factor(options: &Options) -> Result<(ResultBody, i32), Error> {
    let [text] = options.positionals.as_slice() else {
        return Err(Error::Parse("factor takes exactly one element".into()));
    };
    let x = QuadInt::parse(text, -5)?;
    if x.is_zero() || x.is_unit() {
        return Err(Error::NotFactorable);
    }
    let factor_bound = options.bound.unwrap_or(DEFAULT_FACTOR_BOUND);
    let certificate = is_irreducible_with_bound(&x, factor_bound)?;
    let length = factorization_length_with_bound(&x, factor_bound)?;
    let count = count_factorizations_with_bound(&x, factor_bound)?;
    let factorizations = enumerate_factorizations_with_bound(&x, factor_bound)?;

    let mut exit = 0;
    let oracle = if options.oracle {
        let oracle_bound = options.bound.unwrap_or(DEFAULT_ORACLE_BOUND);
        let by_search = brute_force_factorizations_with_bound(&x, oracle_bound)?;
        let agrees = by_search == factorizations;
        if !agrees {
            exit = 5;
        }
        Some(OracleBody { bound: oracle_bound, count: by_search.len() as u64, agrees })
    } else {
        None
    };

    let body = ResultBody::Factor {
        element: x.to_string(),
        norm: x.norm(),
        irreducible: certificate.is_irreducible(),
        certificate: certificate_body(&certificate),
        length,
        count,
        factorizations: if options.count_only {
            None
        } else {
            Some(factorizations.iter().map(factorization_body).collect())
        },
        oracle,
    };
    Ok((body, exit))
}

fn cmd_ideal(subcommand: &str, options: &Options) -> Result<(ResultBody, i32), Error> {
    let args = &options.positionals;
    let one_arg = || -> Result<QuadIdeal, Error> {
        let [text] = args.as_slice() else {
            return Err(Error::Parse(format!("ideal {subcommand} takes exactly one ideal")));
        };
        parse_ideal(text, options.d)
    };
    let two_args = || -> Result<(QuadIdeal, QuadIdeal), Error> {
        let [left, right] = args.as_slice() else {
            return Err(Error::Parse(format!("ideal {subcommand} takes exactly two ideals")));
        };
        Ok((parse_ideal(left, options.d)?, parse_ideal(right, options.d)?))
    };
    let body = match subcommand {
        "norm" => {
            let ideal = one_arg()?;
            ResultBody::IdealNorm { ideal: ideal.to_string(), norm: ideal.norm() }
        }
        "mul" => {
            let (left, right) = two_args()?;
            let product = left.mul(&right)?;
            ResultBody::IdealMul {
                left: left.to_string(),
                right: right.to_string(),
                product: product.to_string(),
            }
        }
        "divide" => {
            let (left, right) = two_args()?;
            let quotient = quadring::class_group::ideal_divide(&left, &right)?;
            ResultBody::IdealDivide {
                left: left.to_string(),
                right: right.to_string(),
                quotient: quotient.to_string(),
            }
        }
        "class" => {
            let ideal = one_arg()?;
            let generator = is_principal(&ideal)?;
            ResultBody::IdealClass {
                ideal: ideal.to_string(),
                class: match generator {
                    Some(_) => IdealClass::Principal.to_string(),
                    None => IdealClass::NonPrincipal.to_string(),
                },
                generator: generator.map(|g| g.to_string()),
            }
        }
        "factor" => {
            let ideal = one_arg()?;
            let bound = options.bound.unwrap_or(DEFAULT_FACTOR_BOUND);
            let pf = factor_ideal_with_bound(&ideal, bound)?;
            ResultBody::IdealFactor { ideal: ideal.to_string(), factors: prime_factor_bodies(&pf) }
        }
        "inverse" => {
            let ideal = one_arg()?;
            let pair = inverse_pair(&ideal)?;
            let product = ideal.mul(&pair.conjugate)?;
            ResultBody::IdealInverse {
                ideal: ideal.to_string(),
                conjugate: pair.conjugate.to_string(),
                f: pair.f,
                product: product.to_string(),
            }
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown ideal subcommand '{other}' (norm|mul|divide|class|factor|inverse)"
            )))
        }
    };
    Ok((body, 0))
}

fn cmd_prime(options: &Options) -> Result<(ResultBody, i32), Error> {
    let [text] = options.positionals.as_slice() else {
        return Err(Error::Parse("prime takes exactly one integer".into()));
    };
    let p: i128 = text.parse().map_err(|_| Error::Parse(format!("invalid integer '{text}'")))?;
    let classification = classify_prime(p)?;
    let pf = factor_rational_prime(p)?;
    Ok((
        ResultBody::Prime {
            p,
            classification: classification.to_string(),
            factors: prime_factor_bodies(&pf),
        },
        0,
    ))
}

fn cmd_hilbert(options: &Options) -> Result<(ResultBody, i32), Error> {
    let [text] = options.positionals.as_slice() else {
        return Err(Error::Parse("hilbert takes exactly one integer".into()));
    };
    let n: u64 = text.parse().map_err(|_| Error::Parse(format!("invalid integer '{text}'")))?;
    let element = HilbertElement::new(n)?;
    let bound = options.bound.unwrap_or(DEFAULT_FACTOR_BOUND);
    let irreducible = hilbert::is_irreducible(element)?;
    let factorizations = hilbert::enumerate_factorizations_with_bound(element, bound)?;
    let count = hilbert::count_factorizations_with_bound(element, bound)?;
    let length = factorizations.first().map(|f| f.len() as u64).unwrap_or(0);
    Ok((ResultBody::Hilbert { n, irreducible, length, count, factorizations }, 0))
}

fn cmd_selftest(options: &Options) -> Result<(ResultBody, i32), Error> {
    let [text] = options.positionals.as_slice() else {
        return Err(Error::Parse("selftest takes exactly one bound".into()));
    };
    let bound: i128 = text.parse().map_err(|_| Error::Parse(format!("invalid bound '{text}'")))?;
    if bound <= 0 {
        return Err(Error::Domain("selftest bound must be positive".into()));
    }
    let report = selftest::run(bound)?;
    let all_passed = report.all_passed();
    let body = ResultBody::Selftest {
        bound: report.bound,
        suites: report
            .suites
            .iter()
            .map(|s| SuiteBody { name: s.name.to_string(), passed: s.passed, failed: s.failed })
            .collect(),
        all_passed,
    };
    Ok((body, if all_passed { 0 } else { 5 }))
}

fn emit(report: &Report, json: bool, code: i32) -> i32 {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_human());
        if let Some(error) = &report.error {
            eprintln!("error ({}): {}", error.kind, error.message);
        }
    }
    code
}

fn run(args: &[String]) -> i32 {
    if args.is_empty() {
        eprint!("{USAGE}");
        return 2;
    }
    if args[0] == "--help" || args[0] == "-h" || args[0] == "help" {
        print!("{USAGE}");
        return 0;
    }

    let mut command = args[0].clone();
    let mut rest = &args[1..];
    if command == "ideal" {
        let Some(sub) = rest.first() else {
            eprintln!(
                "error (parse): ideal requires a subcommand (norm|mul|divide|class|factor|inverse)"
            );
            return 2;
        };
        command = format!("ideal {sub}");
        rest = &rest[1..];
    }
    let raw_inputs: Vec<String> = rest.to_vec();

    let options = match parse_flags(rest) {
        Ok(options) => options,
        Err(message) => {
            let report = Report::error(&command, raw_inputs, "parse", message);
            let json = args.iter().any(|a| a == "--json-style");
            return emit(&report, json, 2);
        }
    };

    let outcome = if let Some(sub) = command.strip_prefix("ideal ") {
        cmd_ideal(sub, &options)
    } else {
        match command.as_str() {
            "factor" => cmd_factor(&options),
            "prime" => cmd_prime(&options),
            "hilbert" => cmd_hilbert(&options),
            "selftest" => cmd_selftest(&options),
            other => Err(Error::Parse(format!("unknown command '{other}'"))),
        }
    };

    match outcome {
        Ok((body, code)) => {
            let mut report = Report::ok(&command, raw_inputs, body);
            if code == 5 {
                report.status = report::Status::Error;
                report.error = Some(report::ErrorBody {
                    kind: "mismatch".to_string(),
                    message: "oracle or invariant mismatch".to_string(),
                });
            }
            emit(&report, options.json, code)
        }
        Err(error) => {
            let report =
                Report::error(&command, raw_inputs, error_kind_name(&error), error.to_string());
            emit(&report, options.json, exit_code(&error))
        }
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(run(&args));
}
