use std::f64::consts::PI;
use std::fmt::Write;

use cubicsolve::report::{ComplexRecord, OutputRecord};
use cubicsolve::DenestResult;

/// `x` to `sig` significant digits, trailing zeros removed.
pub fn number(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sig = sig.max(1);
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..16).contains(&exp) {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        let rounded: f64 = sci.parse().expect("formatted float");
        trim(format!("{rounded:.decimals$}"))
    } else {
        format!("{}e{exp}", trim(mantissa.to_string()))
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn complex(z: &ComplexRecord, sig: usize) -> String {
    if z.im == 0.0 {
        number(z.re, sig)
    } else if z.re == 0.0 {
        format!("{}i", number(z.im, sig))
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{} {sign} {}i", number(z.re, sig), number(z.im.abs(), sig))
    }
}

fn header(r: &OutputRecord, sig: usize, out: &mut String) {
    let d = &r.depressed;
    let _ = writeln!(out, "input: {}", r.input);
    let _ = writeln!(
        out,
        "depressed: p = {}, q = {} (x = y - {})",
        number(d.p, sig),
        number(d.q, sig),
        number(d.shift, sig)
    );
    let _ = writeln!(out, "case: {}", r.case);
    if let Some(rs) = &r.rs {
        let _ = write!(out, "r = {}, s = {}", complex(&rs.r, sig), complex(&rs.s, sig));
        if let Some([er, es]) = &rs.exact {
            let _ = write!(out, " (exact: r = {er}, s = {es})");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "method: {}", r.method);
}

fn footer(r: &OutputRecord, sig: usize, out: &mut String) {
    let res: Vec<String> = r.residuals.iter().map(|e| number(*e, 3)).collect();
    let _ = writeln!(out, "residuals: {}", res.join(", "));
    if let Some(c) = &r.comparison {
        let roots: Vec<String> = c.cardano_roots.iter().map(|z| complex(z, sig)).collect();
        let _ = writeln!(out, "cardano: {}", roots.join(", "));
        let _ = writeln!(out, "cardano (q/2)^2 + (p/3)^3 = {}", number(c.cardano_disc, sig));
        let _ = writeln!(out, "max matched distance: {}", number(c.max_distance, 3));
    }
    if let Some(v) = &r.verification {
        let _ = writeln!(
            out,
            "verification: {} (tolerance {})",
            if v.pass { "pass" } else { "FAIL" },
            number(v.tolerance, 3)
        );
    }
}

pub fn text(r: &OutputRecord, sig: usize) -> String {
    let mut out = String::new();
    header(r, sig, &mut out);
    for (i, z) in r.roots.iter().enumerate() {
        let _ = writeln!(out, "x{} = {}", i + 1, complex(z, sig));
    }
    footer(r, sig, &mut out);
    out
}

pub fn trig(r: &OutputRecord, sig: usize) -> String {
    let Some(t) = &r.trig else {
        let mut out = text(r, sig);
        let _ = writeln!(out, "trig form: not available for case {}", r.case);
        return out;
    };
    let mut out = String::new();
    header(r, sig, &mut out);
    let _ = writeln!(out, "amplitude = {} (-2*sqrt(rs))", number(t.amplitude, sig));
    let _ = writeln!(
        out,
        "theta = {} = {}*pi (Arg r)",
        number(t.theta, sig),
        number(t.theta / PI, sig)
    );
    for (i, (z, angle)) in r.roots.iter().zip(t.offsets).enumerate() {
        let shift = if t.translation == 0.0 {
            String::new()
        } else if t.translation < 0.0 {
            format!(" - {}", number(-t.translation, sig))
        } else {
            format!(" + {}", number(t.translation, sig))
        };
        let _ = writeln!(
            out,
            "x{} = {}*cos({} = {}*pi){} = {}",
            i + 1,
            number(t.amplitude, sig),
            number(angle, sig),
            number(angle / PI, sig),
            shift,
            complex(z, sig)
        );
    }
    footer(r, sig, &mut out);
    out
}

pub fn exact(r: &OutputRecord, sig: usize) -> String {
    let mut out = String::new();
    header(r, sig, &mut out);
    match &r.exact {
        Some(values) => {
            for (i, v) in values.iter().enumerate() {
                let _ = writeln!(out, "x{} = {v}", i + 1);
            }
        }
        None => {
            for (i, z) in r.roots.iter().enumerate() {
                let _ = writeln!(out, "x{} = {}", i + 1, complex(z, sig));
            }
            let _ = writeln!(out, "exact: null");
        }
    }
    footer(r, sig, &mut out);
    out
}

pub fn denest_text(input: &str, d: &DenestResult, sig: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "radical: {input}");
    let _ = writeln!(
        out,
        "cubic: x^3 + p*x + q with p = {}, q = {}",
        number(d.cubic.p, sig),
        number(d.cubic.q, sig)
    );
    match (&d.exact, d.note()) {
        (Some(e), _) => {
            let _ = writeln!(out, "value = {e} (exact)");
        }
        (None, note) => {
            let _ = writeln!(out, "value = {} ({})", number(d.value, sig), note.unwrap_or("numeric"));
        }
    }
    out
}
