//! Sweep the emission time over one period in parallel, write the table,
//! read it back and recompute it.

use recoherence_lab::config::{OutputFormat, PointConfig};
use recoherence_lab::sweep::{replay, sweep, SweepAxis};
use recoherence_lab::table::Table;
use recoherence_lab::Result;

pub fn run() -> Result<()> {
    let base = PointConfig::default();
    // π/ω̄ in units of T at ω̄T = 3.
    let period = std::f64::consts::PI / base.omega_bar_t;
    let axis = SweepAxis::parse(&format!("t0_over_T=lin:0:{period}:41"))?;
    let table = sweep(&base, &[axis], 4)?;

    let g = table.numeric_column("g")?;
    let mean = g[..40].iter().sum::<f64>() / 40.0;
    let sinh2 = base.state.r.sinh().powi(2);
    println!("mean g over one period {mean:.12} vs sinh²r {sinh2:.12}");
    assert!((mean - sinh2).abs() < 1e-9);

    let in_window = table.rows.iter().filter(|r| r[table.column_index("in_window").unwrap()].as_bool() == Some(true)).count();
    println!("{in_window} of {} emission times recohere", table.rows.len());

    for format in [OutputFormat::Csv, OutputFormat::Json] {
        let text = table.render(format);
        let back = match format {
            OutputFormat::Csv => Table::from_csv(&text)?,
            OutputFormat::Json => Table::from_jsonl(&text)?,
        };
        assert_eq!(replay(&back)?.rows, table.rows);
        println!("{:?}: {} bytes, replay identical", format, text.len());
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
