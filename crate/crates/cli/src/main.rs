use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orbidiss::text::{
    emit_curve, emit_dissection, emit_grading, emit_quiver, emit_word, parse_curve, parse_dissection, parse_quiver,
    parse_word,
};
use orbidiss::{
    complexes_isomorphic, double_dual_check, dualize, enumerate_bands, enumerate_strings, finiteness_checks, grade,
    is_gentle, is_locally_gentle, is_skew_gentle, isomorphic, koszul_dissection_check_up_to, orbifold_to_skewgentle,
    quadratic_dual, skein_normalize, skewgentle_to_orbifold, topology, validate_complex, validate_curve, CurveModel,
    Error, HomotopyWord, PolygonComplex, Presentation,
};

#[derive(Parser)]
#[command(
    name = "orbidiss",
    version,
    about = "Skew-gentle algebras and their orbifold dissections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a presentation is locally gentle, gentle and skew-gentle.
    Validate { quiver: PathBuf },
    /// Dissection of a gentle presentation, or the presentation of a dissection.
    Model { file: PathBuf },
    /// Orbifold dissection of a skew-gentle presentation.
    Orbifold { quiver: PathBuf },
    /// Dual dissection.
    Dual { dissection: PathBuf },
    /// Quadratic dual, checked against the dual dissection.
    Koszul {
        quiver: PathBuf,
        /// Identify mirror-image dissections.
        #[arg(long)]
        reflections: bool,
    },
    /// Homotopy strings up to the given bounds.
    Strings {
        quiver: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_letters: usize,
        #[arg(long, default_value_t = 2)]
        max_path: usize,
        /// Leave out strings without letters.
        #[arg(long)]
        no_trivial: bool,
    },
    /// Homotopy bands up to the given bounds.
    Bands {
        quiver: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_letters: usize,
        #[arg(long, default_value_t = 2)]
        max_path: usize,
    },
    /// Grading of a curve on a dissection.
    Grade {
        dissection: PathBuf,
        #[arg(long)]
        curve: PathBuf,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        f0: i64,
    },
    /// Translate between words and graded curves on the orbifold model.
    Translate {
        quiver: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
        /// Word to translate (with `--to curve`).
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        /// Curve file to translate (with `--to string`).
        #[arg(long)]
        curve: Option<PathBuf>,
    },
    /// Run every validator and round trip on the given files or directories.
    CheckAll { paths: Vec<PathBuf> },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Curve,
    String,
}

/// Failure of a command, with its exit status.
enum Failure {
    /// Exit 1: the input is well formed but fails a check.
    Check(String),
    /// Exit 2: unreadable or malformed input, or inconsistent flags.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Syntax { .. } | Error::At { .. } => Failure::Usage(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: orbidiss::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| match Failure::from(e) {
        Failure::Usage(m) => Failure::Usage(format!("{}:{m}", path.display())),
        other => other,
    })
}

fn load_quiver(path: &Path) -> Result<Presentation, Failure> {
    in_file(path, parse_quiver(&read(path)?))
}

fn load_dissection(path: &Path) -> Result<PolygonComplex, Failure> {
    in_file(path, parse_dissection(&read(path)?))
}

fn yes(v: &orbidiss::Verdict) -> &'static str {
    if v.ok() {
        "yes"
    } else {
        "no"
    }
}

fn validate(path: &Path) -> Outcome {
    let p = load_quiver(path)?;
    let (local, gentle, skew) = (
        is_locally_gentle(&p.underlying()),
        is_gentle(&p.underlying()),
        is_skew_gentle(&p),
    );
    let specials = if p.special().is_empty() {
        " (S empty)".to_string()
    } else {
        format!(" (|S| = {})", p.special().len())
    };
    let mut out = format!(
        "locally gentle: {}; gentle: {}; skew-gentle: {}{}\n",
        yes(&local),
        yes(&gentle),
        yes(&skew),
        if skew.ok() { specials.as_str() } else { "" }
    );
    for v in &skew.violations {
        let _ = writeln!(out, "  {v}");
    }
    if skew.ok() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Check("not skew-gentle".into()))
    }
}

fn report(c: &PolygonComplex) -> Result<String, Failure> {
    let t = topology(c)?;
    Ok(format!(
        "# euler characteristic: {}\n# boundary components: {}\n# genus: {}\n# marked points: {} boundary, {} interior, {} dual interior, {} orbifold\n",
        t.euler_characteristic,
        t.boundary_components,
        t.genus,
        t.boundary_marked_points,
        t.interior_marked_points,
        t.dual_interior_points,
        t.orbifold_points
    ))
}

fn is_dissection_text(text: &str) -> bool {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    first.is_some_and(|l| ["poly", "orbifold", "label"].contains(&l.split_whitespace().next().unwrap_or("")))
}

fn model(path: &Path) -> Outcome {
    let text = read(path)?;
    if is_dissection_text(&text) {
        let c = in_file(path, parse_dissection(&text))?;
        Ok(emit_quiver(&orbifold_to_skewgentle(&c)?))
    } else {
        let p = in_file(path, parse_quiver(&text))?;
        let c = orbidiss::gentle_to_dissection(&p)?;
        Ok(emit_dissection(&c) + &report(&c)?)
    }
}

fn orbifold(path: &Path) -> Outcome {
    let c = skewgentle_to_orbifold(&load_quiver(path)?)?;
    Ok(emit_dissection(&c) + &report(&c)?)
}

fn dual(path: &Path) -> Outcome {
    let c = load_dissection(path)?;
    let verdict = validate_complex(&c);
    if !verdict.ok() {
        return Err(Failure::Check(verdict.to_string()));
    }
    Ok(emit_dissection(&dualize(&c)?))
}

fn koszul(path: &Path, reflections: bool) -> Outcome {
    let p = load_quiver(path)?;
    let d = quadratic_dual(&p)?;
    let verdict = koszul_dissection_check_up_to(&p, reflections);
    if verdict.ok() {
        Ok(emit_quiver(&d))
    } else {
        print!("{}", emit_quiver(&d));
        Err(Failure::Check(verdict.to_string()))
    }
}

fn strings(path: &Path, max_letters: usize, max_path: usize, no_trivial: bool) -> Outcome {
    let p = load_quiver(path)?;
    require_skew_gentle(&p)?;
    let mut out = String::new();
    for s in enumerate_strings(&p, max_letters, max_path) {
        if !(no_trivial && s.letters.is_empty()) {
            out.push_str(&emit_word(&HomotopyWord::String(s)));
            out.push('\n');
        }
    }
    Ok(out)
}

fn bands(path: &Path, max_letters: usize, max_path: usize) -> Outcome {
    let p = load_quiver(path)?;
    require_skew_gentle(&p)?;
    let mut out = String::new();
    for b in enumerate_bands(&p, max_letters, max_path) {
        out.push_str(&emit_word(&HomotopyWord::Band(b)));
        out.push('\n');
    }
    Ok(out)
}

fn require_skew_gentle(p: &Presentation) -> Result<(), Failure> {
    let verdict = is_skew_gentle(p);
    if verdict.ok() {
        Ok(())
    } else {
        Err(Failure::Check(format!("not skew-gentle: {verdict}")))
    }
}

fn grade_cmd(dissection: &Path, curve: &Path, f0: i64) -> Outcome {
    let c = load_dissection(dissection)?;
    let curve = in_file(curve, parse_curve(&read(curve)?))?;
    Ok(emit_grading(&grade(&c, &curve, f0)?))
}

fn translate(path: &Path, to: Target, word: Option<&str>, curve: Option<&Path>) -> Outcome {
    let p = load_quiver(path)?;
    let d = skewgentle_to_orbifold(&p)?;
    let model = CurveModel::new(&p, &d)?;
    match (to, word, curve) {
        (Target::Curve, Some(w), None) => {
            let w = parse_word(&p, w).map_err(|e| Failure::Usage(format!("--word:{e}")))?;
            let g = model.string_to_curve(&w)?;
            Ok(emit_curve(&g.curve) + &emit_grading(&g))
        }
        (Target::String, None, Some(file)) => {
            let c = in_file(file, parse_curve(&read(file)?))?;
            let g = grade(&d, &c, 0)?;
            Ok(emit_word(&model.curve_to_string(&g)?) + "\n")
        }
        (Target::Curve, _, _) => Err(Failure::Usage("--to curve takes --word and no --curve".into())),
        (Target::String, _, _) => Err(Failure::Usage("--to string takes --curve and no --word".into())),
    }
}

/// Checks run on one quiver file.
fn check_quiver(text: &str) -> Result<(), Failure> {
    let p = parse_quiver(text)?;
    let emitted = emit_quiver(&p);
    if emit_quiver(&parse_quiver(&emitted)?) != emitted {
        return Err(Failure::Check("emitted text does not round trip".into()));
    }
    require_skew_gentle(&p)?;
    let dd = double_dual_check(&p);
    if !dd.ok() {
        return Err(Failure::Check(dd.to_string()));
    }
    if !p.quiver().is_connected() {
        return Ok(());
    }
    let c = skewgentle_to_orbifold(&p)?;
    if !isomorphic(&orbifold_to_skewgentle(&c)?, &p) {
        return Err(Failure::Check(
            "the model does not read back to the presentation".into(),
        ));
    }
    let k = koszul_dissection_check_up_to(&p, false);
    if !k.ok() {
        return Err(Failure::Check(k.to_string()));
    }
    if p.special().is_empty() && is_gentle(&p).ok() {
        let f = finiteness_checks(&p)?;
        if !f.agree {
            return Err(Failure::Check(format!("finiteness checks disagree: {f:?}")));
        }
    }
    let model = CurveModel::new(&p, &c)?;
    let words = enumerate_strings(&p, 3, 2)
        .into_iter()
        .map(HomotopyWord::String)
        .chain(enumerate_bands(&p, 4, 2).into_iter().map(HomotopyWord::Band));
    for w in words {
        let g = match model.string_to_curve(&w) {
            Ok(g) => g,
            Err(Error::InteriorRegion(_)) => continue,
            Err(e) => return Err(e.into()),
        };
        if model.curve_to_string(&g)? != w {
            return Err(Failure::Check(format!(
                "`{}` does not survive the curve translation",
                emit_word(&w)
            )));
        }
    }
    Ok(())
}

fn check_dissection(text: &str) -> Result<(), Failure> {
    let c = parse_dissection(text)?;
    let verdict = validate_complex(&c);
    if !verdict.ok() {
        return Err(Failure::Check(verdict.to_string()));
    }
    let emitted = emit_dissection(&c);
    if emit_dissection(&parse_dissection(&emitted)?) != emitted {
        return Err(Failure::Check("emitted text does not round trip".into()));
    }
    topology(&c)?;
    if !complexes_isomorphic(&dualize(&dualize(&c)?)?, &c, false) {
        return Err(Failure::Check("the dual of the dual differs".into()));
    }
    let p = orbifold_to_skewgentle(&c)?;
    if !complexes_isomorphic(&skewgentle_to_orbifold(&p)?, &c, false) {
        return Err(Failure::Check(
            "the presentation does not rebuild the dissection".into(),
        ));
    }
    Ok(())
}

/// A curve file `name.*.curve` lives next to the dissection `name.diss`.
fn check_curve(path: &Path, text: &str) -> Result<(), Failure> {
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
    let stem = name.split('.').next().unwrap_or(name);
    let diss = path.with_file_name(format!("{stem}.diss"));
    let c = load_dissection(&diss)?;
    let curve = parse_curve(text)?;
    if parse_curve(&emit_curve(&curve))? != curve {
        return Err(Failure::Check("emitted text does not round trip".into()));
    }
    validate_curve(&c, &curve)?;
    let normal = skein_normalize(&curve);
    if skein_normalize(&normal) != normal {
        return Err(Failure::Check("skein normal form is not stable".into()));
    }
    grade(&c, &curve, 0)?;
    Ok(())
}

fn collect(paths: &[PathBuf]) -> Result<Vec<PathBuf>, Failure> {
    let mut files = Vec::new();
    for path in paths {
        if path.is_dir() {
            let entries = fs::read_dir(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let mut inside: Vec<PathBuf> = entries.filter_map(|e| e.ok().map(|e| e.path())).collect();
            inside.sort();
            files.extend(inside.into_iter().filter(|p| {
                matches!(
                    p.extension().and_then(|e| e.to_str()),
                    Some("quiver" | "diss" | "curve")
                )
            }));
        } else {
            files.push(path.clone());
        }
    }
    Ok(files)
}

fn check_all(paths: &[PathBuf]) -> Outcome {
    if paths.is_empty() {
        return Err(Failure::Usage("check-all needs at least one file or directory".into()));
    }
    let mut out = String::new();
    let mut worst = 0;
    for file in collect(paths)? {
        let result = read(&file).and_then(|text| match file.extension().and_then(|e| e.to_str()) {
            Some("quiver") => check_quiver(&text),
            Some("diss") => check_dissection(&text),
            Some("curve") => check_curve(&file, &text),
            _ => Err(Failure::Usage("unknown file kind".into())),
        });
        match result {
            Ok(()) => {
                let _ = writeln!(out, "ok {}", file.display());
            }
            Err(Failure::Check(m)) => {
                worst = worst.max(1);
                let _ = writeln!(out, "FAIL {}: {m}", file.display());
            }
            Err(Failure::Usage(m)) => {
                worst = 2;
                let _ = writeln!(out, "FAIL {}: {m}", file.display());
            }
        }
    }
    match worst {
        0 => Ok(out),
        1 => {
            print!("{out}");
            Err(Failure::Check("some checks failed".into()))
        }
        _ => {
            print!("{out}");
            Err(Failure::Usage("some files could not be read".into()))
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { quiver } => validate(&quiver),
        Command::Model { file } => model(&file),
        Command::Orbifold { quiver } => orbifold(&quiver),
        Command::Dual { dissection } => dual(&dissection),
        Command::Koszul { quiver, reflections } => koszul(&quiver, reflections),
        Command::Strings {
            quiver,
            max_letters,
            max_path,
            no_trivial,
        } => strings(&quiver, max_letters, max_path, no_trivial),
        Command::Bands {
            quiver,
            max_letters,
            max_path,
        } => bands(&quiver, max_letters, max_path),
        Command::Grade { dissection, curve, f0 } => grade_cmd(&dissection, &curve, f0),
        Command::Translate {
            quiver,
            to,
            word,
            curve,
        } => translate(&quiver, to, word.as_deref(), curve.as_deref()),
        Command::CheckAll { paths } => check_all(&paths),
    }
}

fn error_prefix() -> &'static str {
    match std::env::var("ORBIDISS_COLOR").as_deref() {
        Ok("1") => "\x1b[31merror\x1b[0m",
        _ => "error",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(m)) => {
            eprintln!("{}: {m}", error_prefix());
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("{}: {m}", error_prefix());
            ExitCode::from(2)
        }
    }
}
