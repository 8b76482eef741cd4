use std::path::Path;

use motivic_zeta::analytic::{self, BranchWindow};
use motivic_zeta::exact::rational::{self, Rational};
use motivic_zeta::measures::{self, MeasureClass};
use motivic_zeta::motive::{self, TracedMotive};
use motivic_zeta::numk0::{self, intmat, EulerGram};
use motivic_zeta::reconstruct;
use motivic_zeta::series::{self, TruncatedSeries, WittElement};
use motivic_zeta::variety::{self, action::RawAction, CharacterTable, CountConfig, GroupAction, Strategy, VarietySpec};
use num_bigint::BigInt;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::args::*;
use crate::io::{from_value, load, read_value, to_value, AtInput, CliResult, Failure};

impl Counting {
    fn config(&self) -> CountConfig {
        let mut c = CountConfig::default();
        if let Some(b) = self.budget {
            c.budget = b;
        }
        if let Some(t) = self.threads {
            c.threads = t.max(1);
        }
        c.strategy = match self.strategy {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Exhaustive => Strategy::Exhaustive,
            StrategyArg::Fibered => Strategy::Fibered,
        };
        c
    }
}

impl From<WindowArg> for BranchWindow {
    fn from(w: WindowArg) -> Self {
        match w {
            WindowArg::Principal => BranchWindow::Principal,
            WindowArg::LowerClosed => BranchWindow::LowerClosed,
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SequenceFile {
    Wrapped {
        #[serde(with = "rational::rational_vec_serde")]
        values: Vec<Rational>,
    },
    Bare(#[serde(with = "rational::rational_vec_serde")] Vec<Rational>),
}

fn load_sequence(path: &Path) -> CliResult<Vec<Rational>> {
    Ok(match load::<SequenceFile>(path)? {
        SequenceFile::Wrapped { values } | SequenceFile::Bare(values) => values,
    })
}

/// A Witt vector given directly, or as the zeta series of a motive.
fn load_witt(path: &Path, precision: Option<usize>) -> CliResult<WittElement> {
    let v = read_value(path)?;
    let w = if v.get("f_plus").is_some() {
        let m: TracedMotive = from_value(v, path)?;
        motive::zeta_series(&m, precision.unwrap_or(series::DEFAULT_PRECISION))
    } else {
        let s: TruncatedSeries = from_value(v, path)?;
        WittElement::new(s).at(path)?
    };
    Ok(match precision {
        Some(p) if p < w.precision() => WittElement::new(w.series().truncate(p)).expect("truncation keeps the constant term"),
        _ => w,
    })
}

fn exactly<'a>(paths: &'a [std::path::PathBuf], n: usize, what: &str) -> CliResult<&'a [std::path::PathBuf]> {
    if paths.len() == n {
        Ok(paths)
    } else {
        Err(Failure::validation(format!("expected {n} --in files ({what}), got {}", paths.len()), None))
    }
}

#[derive(Serialize)]
struct BigList(#[serde(with = "intmat::int_serde::vec")] Vec<BigInt>);

pub fn run(cmd: &Command) -> CliResult<Value> {
    match cmd {
        Command::Motive(c) => run_motive(c),
        Command::Witt(c) => run_witt(c),
        Command::Reconstruct(c) => run_reconstruct(c),
        Command::Variety(c) => run_variety(c),
        Command::Lfun { inputs, nmax, counting } => {
            let paths = &inputs.inputs;
            if !(2..=3).contains(&paths.len()) {
                return Err(Failure::validation("expected --in variety --in action [--in character]", None));
            }
            let cfg = counting.config();
            let v: VarietySpec = load(&paths[0])?;
            let action = GroupAction::from_raw(&v, load::<RawAction>(&paths[1])?, &cfg).at(&paths[1])?;
            let character = match paths.get(2) {
                Some(p) => load::<CharacterTable>(p)?,
                None => CharacterTable::trivial(&action),
            };
            let at = paths.get(2).unwrap_or(&paths[0]);
            let l = variety::l_function(&v, &action, &character, *nmax, &cfg).at(at)?;
            Ok(to_value(&l))
        }
        Command::Orbifold { inputs, nmax, counting } => {
            let paths = exactly(&inputs.inputs, 2, "variety, action")?;
            let cfg = counting.config();
            let v: VarietySpec = load(&paths[0])?;
            let action = GroupAction::from_raw(&v, load::<RawAction>(&paths[1])?, &cfg).at(&paths[1])?;
            Ok(to_value(&variety::orbifold_zeta(&v, &action, *nmax, &cfg).at(&paths[0])?))
        }
        Command::ArtinMazur { p, m, nmax, enumerate } => {
            let traces = variety::artin_mazur_traces(*p, *m, *nmax)?;
            let as_rational: Vec<Rational> = traces.iter().cloned().map(rational::from_bigint).collect();
            let zeta_coeffs = reconstruct::traces_to_series(&as_rational);
            let enumerated = match enumerate {
                Some(k) => Some((1..=*k).map(|n| variety::artin_mazur_by_enumeration(*p, *m, n)).collect::<Result<Vec<u64>, _>>()?),
                None => None,
            };
            Ok(json!({
                "p": p,
                "m": m,
                "traces": to_value(&BigList(traces)),
                "enumerated": enumerated,
                "zeta_profile": reconstruct::linear_complexity_profile(zeta_coeffs.coeffs()),
                "reconstruction": to_value(&reconstruct::traces_to_zeta(&as_rational)),
            }))
        }
        Command::Hw(c) => run_hw(c),
        Command::Theta { input, q, window } => {
            let m: TracedMotive = load(&input.input)?;
            Ok(to_value(&analytic::theta_construction(&m, *q, (*window).into()).at(&input.input)?))
        }
        Command::RegdetCheck { input, q, samples, seed, window } => {
            let m: TracedMotive = load(&input.input)?;
            let mut rng = StdRng::seed_from_u64(*seed);
            let points: Vec<Complex64> = (0..*samples)
                .map(|_| Complex64::new(rng.random_range(-2.0..3.0), rng.random_range(-4.0..4.0)))
                .collect();
            let r = analytic::regularized_det_check(&m, *q, &points, (*window).into()).at(&input.input)?;
            Ok(json!({"seed": seed, "window": to_value(&BranchWindow::from(*window)), "report": to_value(&r)}))
        }
        Command::Numk0(c) => run_numk0(c),
        Command::Measure(c) => run_measure(c),
    }
}

fn run_motive(c: &MotiveCmd) -> CliResult<Value> {
    match c {
        MotiveCmd::Zeta { input, precision } => {
            let m: TracedMotive = load(&input.input)?;
            let z = motive::zeta_rational(&m);
            Ok(json!({
                "label": m.label,
                "series": to_value(motive::zeta_series(&m, *precision).series()),
                "rational": to_value(&z),
                "display": z.to_string(),
                "degrees": to_value(&motive::zeta_degrees(&m)),
            }))
        }
        MotiveCmd::Feq { input } => {
            let m: TracedMotive = load(&input.input)?;
            Ok(to_value(&motive::check_functional_equation(&m).at(&input.input)?))
        }
        MotiveCmd::Traces { input, nmax } => {
            let m: TracedMotive = load(&input.input)?;
            Ok(to_value(&motive::trace_sequence(&m, *nmax)))
        }
        MotiveCmd::Det { input } => {
            let m: TracedMotive = load(&input.input)?;
            let d = motive::determinant(&m).at(&input.input)?;
            Ok(json!({"determinant": rational::format_rational(&d), "euler_characteristic": m.euler_characteristic()}))
        }
        MotiveCmd::Growth { input, nmax } => {
            let m: TracedMotive = load(&input.input)?;
            let traces = motive::trace_sequence(&m, *nmax).values;
            Ok(json!({
                "spectral_radius": to_value(&analytic::spectral_radius(&m).at(&input.input)?),
                "rate_exact": to_value(&analytic::rate_exact(&m).at(&input.input)?),
                "rate_estimate": analytic::rate_estimate(&traces, *nmax),
                "bound_holds": analytic::growth_bound_check(&m, *nmax).at(&input.input)?,
                "nmax": nmax,
            }))
        }
    }
}

fn run_witt(c: &WittCmd) -> CliResult<Value> {
    match c {
        WittCmd::Add { inputs, precision } | WittCmd::Mul { inputs, precision } => {
            let paths = exactly(&inputs.inputs, 2, "two Witt vectors")?;
            let a = load_witt(&paths[0], *precision)?;
            let b = load_witt(&paths[1], *precision)?;
            let r = match c {
                WittCmd::Add { .. } => series::witt_add(&a, &b),
                _ => series::witt_mul(&a, &b),
            };
            Ok(to_value(r.series()))
        }
        WittCmd::Ghost { input, nmax, precision } => {
            let w = load_witt(&input.input, *precision)?;
            let n = nmax.unwrap_or(w.precision());
            let g = series::ghost_components(&w, n).at(&input.input)?;
            Ok(json!({"ghost": g.iter().map(rational::format_rational).collect::<Vec<_>>()}))
        }
    }
}

fn run_reconstruct(c: &ReconstructCmd) -> CliResult<Value> {
    match c {
        ReconstructCmd::Bm { input } => {
            let s = load_sequence(&input.input)?;
            Ok(to_value(&reconstruct::berlekamp_massey(&s)))
        }
        ReconstructCmd::Traces { input } => {
            let s = load_sequence(&input.input)?;
            Ok(to_value(&reconstruct::traces_to_zeta(&s)))
        }
    }
}

fn run_variety(c: &VarietyCmd) -> CliResult<Value> {
    match c {
        VarietyCmd::Count { input, nmax, counting } => {
            let v: VarietySpec = load(&input.input)?;
            let cfg = counting.config();
            let counts = (1..=*nmax)
                .map(|n| variety::count_points_with(&v, n, &cfg))
                .collect::<motivic_zeta::Result<Vec<u64>>>()
                .at(&input.input)?;
            Ok(json!({"label": v.label, "q": v.q(), "counts": counts}))
        }
        VarietyCmd::Zeta { input, nmax, counting } => {
            let v: VarietySpec = load(&input.input)?;
            let cfg = counting.config();
            let counts = (1..=*nmax)
                .map(|n| variety::count_points_with(&v, n, &cfg))
                .collect::<motivic_zeta::Result<Vec<u64>>>()
                .at(&input.input)?;
            let traces: Vec<Rational> = counts.iter().map(|&c| rational::int(c as i64)).collect();
            Ok(json!({
                "label": v.label,
                "q": v.q(),
                "counts": counts,
                "series": to_value(&reconstruct::traces_to_series(&traces)),
                "reconstruction": to_value(&reconstruct::traces_to_zeta(&traces)),
            }))
        }
        VarietyCmd::Weil { input, dim, nmax, counting } => {
            let v: VarietySpec = load(&input.input)?;
            Ok(to_value(&variety::weil_check(&v, *dim, *nmax, &counting.config()).at(&input.input)?))
        }
        VarietyCmd::ClosedPoints { input, nmax, counting } => {
            let v: VarietySpec = load(&input.input)?;
            let closed = variety::closed_points(&v, *nmax, &counting.config()).at(&input.input)?;
            Ok(json!({"label": v.label, "q": v.q(), "closed_points": closed}))
        }
    }
}

fn run_hw(c: &HwCmd) -> CliResult<Value> {
    match c {
        HwCmd::Eval { input, q, re, im } => {
            let m: TracedMotive = load(&input.input)?;
            let z = analytic::hasse_weil_eval(&m, *q, Complex64::new(*re, *im)).at(&input.input)?;
            Ok(json!({"s": {"re": re, "im": im}, "value": {"re": z.re, "im": z.im}}))
        }
        HwCmd::Poles { input, q, im_min, im_max } => {
            let m: TracedMotive = load(&input.input)?;
            Ok(to_value(&analytic::poles_and_zeros(&m, *q, (*im_min, *im_max)).at(&input.input)?))
        }
        HwCmd::Abscissa { input, q } => {
            let m: TracedMotive = load(&input.input)?;
            Ok(json!({"abscissa": analytic::convergence_abscissa(&m, *q).at(&input.input)?}))
        }
    }
}

#[derive(Deserialize)]
struct QuiverFile {
    vertices: usize,
    #[serde(default)]
    arrows: Vec<(usize, usize)>,
}

fn run_numk0(c: &Numk0Cmd) -> CliResult<Value> {
    match c {
        Numk0Cmd::Compute { input } => {
            let g: EulerGram = load(&input.input)?;
            Ok(to_value(&numk0::num_grothendieck(&g)))
        }
        Numk0Cmd::Beilinson { dim } => {
            let g = numk0::beilinson_gram(*dim);
            Ok(json!({"gram": to_value(&g), "report": to_value(&numk0::num_grothendieck(&g))}))
        }
        Numk0Cmd::Quiver { input } => {
            let q: QuiverFile = load(&input.input)?;
            let g = numk0::quiver_gram(q.vertices, &q.arrows).at(&input.input)?;
            Ok(json!({"gram": to_value(&g), "report": to_value(&numk0::num_grothendieck(&g))}))
        }
        Numk0Cmd::Phi { inputs } => {
            let paths = exactly(&inputs.inputs, 2, "two pairings")?;
            let a: EulerGram = load(&paths[0])?;
            let b: EulerGram = load(&paths[1])?;
            Ok(json!({"kernels_agree": numk0::phi_pairing_check(&a, &b).at(&paths[1])?}))
        }
    }
}

fn run_measure(c: &MeasureCmd) -> CliResult<Value> {
    match c {
        MeasureCmd::Eval { input, q } => {
            let class: MeasureClass = load(&input.input)?;
            let count = measures::mu_count(&class, *q).at(&input.input)?;
            let nc = measures::mu_nc_composite(&class);
            let rig = measures::mu_rig(&class);
            Ok(json!({
                "class": class.to_string(),
                "counting_polynomial": to_value(&class.counting_polynomial()),
                "q": q,
                "mu_count": count.to_string(),
                "mu_rig": rig.to_string(),
                "mu_nc_composite": to_value(&nc),
                "collapse_matches_rig": nc.value.collapse() == rig,
            }))
        }
        MeasureCmd::Witness { n, q } => Ok(to_value(&measures::non_factoring_witness(*n, *q)?)),
    }
}
