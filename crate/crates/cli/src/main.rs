#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod config;
mod csv;
mod error;
mod figures;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::SweepParam;
use config::{MaterialSpec, RunConfig};
use error::CliError;
use figures::Figure;

/// Non-equilibrium Casimir self-propulsion forces, heating and friction.
#[derive(Parser, Debug)]
#[command(name = "casimir-propel", version)]
struct Cli {
    #[command(flatten)]
    overrides: Overrides,

    #[command(subcommand)]
    command: Command,
}

/// Values that override the JSON config. SI units.
#[derive(Args, Debug, Default)]
struct Overrides {
    /// JSON run configuration
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output CSV path (stdout if absent)
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true)]
    t_particle: Option<f64>,
    #[arg(long, global = true)]
    t_plate: Option<f64>,
    /// Particle centre to plate surface, m
    #[arg(long, global = true)]
    d: Option<f64>,
    /// Plate material: preset name or inline JSON model
    #[arg(long, global = true)]
    plate: Option<String>,
    /// Particle material: preset name or inline JSON model
    #[arg(long, global = true)]
    particle_material: Option<String>,
    #[arg(long, global = true)]
    r_par: Option<f64>,
    #[arg(long, global = true)]
    r_perp: Option<f64>,
    #[arg(long, global = true)]
    theta: Option<f64>,
    #[arg(long, global = true)]
    phi: Option<f64>,
    #[arg(long, global = true)]
    rel_tol: Option<f64>,
    /// kg/m³
    #[arg(long, global = true)]
    density: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dilute janus sphere: closed form and Born T-matrix trace
    JanusForce {
        #[arg(long)]
        radius: Option<f64>,
        #[arg(long)]
        lower: Option<String>,
        #[arg(long)]
        upper: Option<String>,
        #[arg(long)]
        temperature: Option<f64>,
        #[arg(long)]
        t_env: Option<f64>,
        #[arg(long)]
        l_max: Option<usize>,
    },
    /// Lateral force on a spheroid above a plate
    SpheroidLateral,
    /// Lateral force over a parameter range
    Sweep {
        #[arg(long, value_enum)]
        param: SweepParam,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long, default_value_t = 50)]
        points: usize,
    },
    /// Im[α∥α⊥*] against ω/c in rad/μm
    Overlap {
        #[arg(long)]
        from: Option<f64>,
        #[arg(long)]
        to: Option<f64>,
        #[arg(long)]
        points: Option<usize>,
    },
    /// Heating rate derivative dH/dv and the additional friction
    Heating {
        /// W/K
        #[arg(long)]
        conductance: Option<f64>,
    },
    /// Friction coefficient against time
    FrictionCurve {
        #[arg(long)]
        gamma_std: Option<f64>,
        #[arg(long)]
        heat_capacity: Option<f64>,
        #[arg(long)]
        conductance: Option<f64>,
        #[arg(long)]
        delta_gamma: Option<f64>,
        #[arg(long)]
        points: Option<usize>,
    },
    /// Mie coefficients of a homogeneous sphere
    Mie {
        #[arg(long)]
        radius: Option<f64>,
        #[arg(long)]
        material: Option<String>,
        #[arg(long)]
        omega: Option<f64>,
        #[arg(long)]
        l_max: Option<usize>,
    },
    /// Fresnel coefficients of the plate material
    Fresnel {
        #[arg(long)]
        material: Option<String>,
        #[arg(long)]
        omega: Option<f64>,
        /// Comma-separated lateral wave numbers, 1/m
        #[arg(long, value_delimiter = ',')]
        k_perp: Option<Vec<f64>>,
    },
    /// Figure data
    Figure {
        #[arg(value_enum)]
        name: Figure,
        #[arg(long)]
        points: Option<usize>,
    },
}

fn set<T>(slot: &mut T, v: Option<T>) {
    if let Some(v) = v {
        *slot = v;
    }
}

fn material(v: &Option<String>) -> Result<Option<MaterialSpec>, CliError> {
    v.as_deref().map(MaterialSpec::parse_flag).transpose()
}

fn resolve_config(o: &Overrides, cmd: &Command) -> Result<RunConfig, CliError> {
    let mut cfg = match &o.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    set(&mut cfg.scene.t_particle, o.t_particle);
    set(&mut cfg.scene.t_plate, o.t_plate);
    set(&mut cfg.scene.d, o.d);
    set(&mut cfg.scene.plate, material(&o.plate)?);
    set(&mut cfg.particle.material, material(&o.particle_material)?);
    set(&mut cfg.particle.r_par, o.r_par);
    set(&mut cfg.particle.r_perp, o.r_perp);
    set(&mut cfg.orientation.theta, o.theta);
    set(&mut cfg.orientation.phi, o.phi);
    set(&mut cfg.quadrature.rel_tol, o.rel_tol);
    set(&mut cfg.density, o.density);
    match cmd {
        Command::JanusForce { radius, lower, upper, temperature, t_env, l_max } => {
            let j = &mut cfg.janus;
            set(&mut j.radius, *radius);
            set(&mut j.lower, material(lower)?);
            set(&mut j.upper, material(upper)?);
            set(&mut j.temperature, *temperature);
            set(&mut j.t_env, *t_env);
            set(&mut j.l_max, *l_max);
        }
        Command::Overlap { from, to, points } => {
            set(&mut cfg.overlap.from, *from);
            set(&mut cfg.overlap.to, *to);
            set(&mut cfg.overlap.points, *points);
        }
        Command::Heating { conductance } => set(&mut cfg.friction.conductance, *conductance),
        Command::FrictionCurve { gamma_std, heat_capacity, conductance, delta_gamma, points } => {
            let f = &mut cfg.friction;
            set(&mut f.gamma_std, *gamma_std);
            set(&mut f.conductance, *conductance);
            set(&mut f.points, *points);
            if heat_capacity.is_some() {
                f.heat_capacity = *heat_capacity;
            }
            if delta_gamma.is_some() {
                f.delta_gamma = *delta_gamma;
            }
        }
        Command::Mie { radius, material: m, omega, l_max } => {
            set(&mut cfg.mie.radius, *radius);
            set(&mut cfg.mie.material, material(m)?);
            set(&mut cfg.mie.omega, *omega);
            set(&mut cfg.mie.l_max, *l_max);
        }
        Command::Fresnel { material: m, omega, k_perp } => {
            set(&mut cfg.fresnel.material, material(m)?);
            set(&mut cfg.fresnel.omega, *omega);
            set(&mut cfg.fresnel.k_perp, k_perp.clone());
        }
        Command::SpheroidLateral | Command::Sweep { .. } | Command::Figure { .. } => {}
    }
    cfg.validate()?;
    Ok(cfg)
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("CASIMIR_PROPEL_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Config(format!("CASIMIR_PROPEL_THREADS must be a positive integer, got '{v}'")))?;
        b = b.num_threads(n);
    }
    b.build().map_err(|e| CliError::Config(format!("thread pool: {e}")))
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = resolve_config(&cli.overrides, &cli.command)?;
    let pool = thread_pool()?;
    let table = pool.install(|| match &cli.command {
        Command::JanusForce { .. } => commands::janus_force(&cfg),
        Command::SpheroidLateral => commands::spheroid_lateral(&cfg),
        Command::Sweep { param, from, to, points } => commands::sweep(&cfg, *param, *from, *to, *points),
        Command::Overlap { .. } => commands::overlap(&cfg, cfg.overlap.from, cfg.overlap.to, cfg.overlap.points),
        Command::Heating { .. } => commands::heating(&cfg),
        Command::FrictionCurve { .. } => commands::friction(&cfg),
        Command::Mie { .. } => commands::mie(&cfg),
        Command::Fresnel { .. } => commands::fresnel(&cfg),
        Command::Figure { name, points } => figures::emit(*name, &cfg, *points),
    })?;
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let config_json = serde_json::to_string(&cfg).map_err(|e| CliError::Config(e.to_string()))?;
    match &cli.overrides.output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            table.write(&mut w, &command, &config_json)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            table.write(stdout.lock(), &command, &config_json)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
