use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superbw_core::{
    classify, galois_twist_chain, real_table, semisimple_wall_class, wall_class, BwClass, DiagonalQuadraticForm,
    Error, Field, GroupSpec, Weight,
};

#[derive(Parser)]
#[command(name = "superbw", version, about = "Brauer-Wall classes and supergroup representation reports")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Arithmetic in the Brauer-Wall group.
    Bw {
        #[command(subcommand)]
        op: BwOp,
    },
    /// Brauer-Wall class of a diagonal Clifford superalgebra.
    Clifford {
        #[arg(long, default_value = "R")]
        field: String,
        /// Comma-separated coefficients, e.g. "1,-1,2/3".
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        /// Drop the radical instead of rejecting degenerate forms.
        #[arg(long)]
        semisimple: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Classification report for an irreducible representation.
    Classify {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Exit with status 3 when some field is undetermined.
        #[arg(long)]
        strict: bool,
    },
    /// The *-orbit of a weight and, where it applies, the odd-reflection chain.
    Orbit {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum BwOp {
    Mul {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(long, default_value = "R")]
        field: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    Inv {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value = "R")]
        field: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The eight real classes as powers of (-,1,1).
    Table {
        #[arg(long, default_value = "R")]
        field: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

struct Output {
    text: String,
    strict_fail: bool,
}

fn class_json(c: &BwClass) -> Value {
    let mut v = serde_json::to_value(c).expect("class serializes");
    if let Ok(name) = c.real_division_superalgebra_name() {
        v["name"] = json!(name);
    }
    v
}

fn class_text(c: &BwClass) -> String {
    match c.real_division_superalgebra_name() {
        Ok(name) => format!("{c}  {name}"),
        Err(_) => c.to_string(),
    }
}

fn render(format: Format, json: Value, text: String) -> Output {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&json).expect("value serializes") + "\n",
        Format::Text => text,
    };
    Output {
        text,
        strict_fail: false,
    }
}

fn run_bw(op: BwOp) -> Result<Output, Error> {
    match op {
        BwOp::Mul { x, y, field, format } => {
            let f: Field = field.parse()?;
            let c = BwClass::parse(f, &x)?.bw_mul(&BwClass::parse(f, &y)?)?;
            Ok(render(format, class_json(&c), class_text(&c) + "\n"))
        }
        BwOp::Inv { x, field, format } => {
            let f: Field = field.parse()?;
            let c = BwClass::parse(f, &x)?.bw_inv();
            Ok(render(format, class_json(&c), class_text(&c) + "\n"))
        }
        BwOp::Table { field, format } => {
            let f: Field = field.parse()?;
            if !f.is_real() {
                return Err(Error::NotReal(f));
            }
            let rows = real_table();
            let json = Value::Array(rows.iter().map(|(c, _)| class_json(c)).collect());
            let text = rows.iter().map(|(c, n)| format!("{c}  {n}\n")).collect();
            Ok(render(format, json, text))
        }
    }
}

fn run(cmd: Command) -> Result<Output, Error> {
    match cmd {
        Command::Bw { op } => run_bw(op),
        Command::Clifford {
            field,
            form,
            semisimple,
            format,
        } => {
            let f: Field = field.parse()?;
            let q = DiagonalQuadraticForm::parse(f, &form)?;
            let c = if semisimple {
                semisimple_wall_class(&q)
            } else {
                wall_class(&q)?
            };
            Ok(render(format, class_json(&c), class_text(&c) + "\n"))
        }
        Command::Classify {
            group,
            weight,
            format,
            strict,
        } => {
            let g: GroupSpec = group.parse()?;
            let w: Weight = weight.parse()?;
            let r = classify(&g, &w)?;
            let text = match format {
                Format::Json => r.to_json() + "\n",
                Format::Text => r.to_text(),
            };
            Ok(Output {
                text,
                strict_fail: strict && r.has_undetermined(),
            })
        }
        Command::Orbit { group, weight, format } => {
            let g: GroupSpec = group.parse()?;
            let w: Weight = weight.parse()?;
            let star = g.star_involution(&w)?;
            let mut orbit = vec![w.clone()];
            if star != w {
                orbit.push(star);
            }
            let chain = if g.twist_chain_applies() {
                Some(galois_twist_chain(&g, &w)?)
            } else {
                None
            };
            let mut text = format!("*-orbit: {}\n", orbit.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
            if let Some(t) = &chain {
                text.push_str(&format!("twist start: {}\n", t.start));
                for step in &t.chain {
                    let mark = if step.applied { "reflected" } else { "fixed" };
                    text.push_str(&format!("  root {}: {mark}\n", step.root));
                }
                text.push_str(&format!("final: {}\nparity flips: {}\n", t.final_weight, t.parity_flips));
            }
            let json = json!({
                "group": g,
                "weight": w,
                "star_orbit": orbit,
                "twist_chain": chain,
            });
            Ok(render(format, json, text))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if out.strict_fail {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
