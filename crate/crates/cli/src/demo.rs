use std::fmt::Write;

use nilcayley::dettheory::DetTheory;
use nilcayley::expr::{parse_element, parse_matrix};
use nilcayley::grassmann::GrassmannAlgebra;
use nilcayley::identities::{check_power_ch, sample_matrices, IdealKind, IdealQuotient, LiftStrategy, Params};
use nilcayley::matpoly::{self, render_matrix, PolyRing};
use nilcayley::relfree;
use nilcayley::ringcore::{Ring, SampleSpec};
use nilcayley::Result;

pub fn run() -> Result<String> {
    let mut out = String::new();
    let e6 = GrassmannAlgebra::new(6)?;
    let prod = parse_element("(v1*v2 - v2*v1)*(v3*v4 - v4*v3)*(v5*v6 - v6*v5)", &e6)?;
    let _ = writeln!(out, "Exterior algebra E_6:");
    let _ = writeln!(out, "  [v1,v2][v3,v4][v5,v6] = {}", e6.render(&prod));

    let e2 = GrassmannAlgebra::new(2)?;
    let a = parse_matrix("[[v1,0],[0,0]]", &e2, Some(2))?;
    let b = parse_matrix("[[v2,0],[0,0]]", &e2, Some(2))?;
    let _ = writeln!(out, "\nTraces are not cyclic over E_2:");
    let _ = writeln!(out, "  tr(AB) = {}", e2.render(&matpoly::trace(&e2, &matpoly::mul(&e2, &a, &b)?)));
    let _ = writeln!(out, "  tr(BA) = {}", e2.render(&matpoly::trace(&e2, &matpoly::mul(&e2, &b, &a)?)));

    let e4 = GrassmannAlgebra::new(4)?;
    let a = parse_matrix("[[v1,v2],[v3,v4]]", &e4, Some(2))?;
    let dt = DetTheory::new(&e4);
    let _ = writeln!(out, "\nA = {} over E_4:", render_matrix(&e4, &a));
    let _ = writeln!(out, "  sdet(A) = {}", e4.render(&dt.sdet(&a)?));
    let cp = dt.char_poly(&a, 2)?;
    for (i, c) in cp.coefficients.iter().enumerate() {
        let _ = writeln!(out, "  lambda_{i} = {}", e4.render(c));
    }
    let pr = PolyRing::new(&e4);
    let residual = matpoly::poly_eval_right(&e4, &a, &pr.from_coefficients(cp.coefficients.clone()));
    let _ = writeln!(out, "  (A)p_(A,2) = {}", render_matrix(&e4, &residual));

    let rf = relfree::build(2, 3, 5)?;
    let alg = rf.algebra();
    let ctx = IdealQuotient::new(alg, IdealKind::DoubleCommutator)?;
    let ms = sample_matrices(alg, 2, 1, &SampleSpec::new(1));
    let report = check_power_ch(&ctx, &ms, 2, LiftStrategy::Canonical, Some(3), Params::default())?;
    let d = report.degree_info.expect("degree info");
    let _ = writeln!(
        out,
        "\nRelatively free index-3 algebra (dimension {}), random 2 x 2 matrix:",
        alg.dim()
    );
    let _ = writeln!(
        out,
        "  double commutator ideal of rank {}; (sum A^i lambda_i)^{} = 0: {}",
        ctx.ideal().rank(),
        d.exponent.unwrap_or(1),
        report.verdict
    );
    let _ = writeln!(
        out,
        "  power identity degree {} vs direct degree {}",
        d.power_identity_degree.unwrap_or(0),
        d.direct_degree.unwrap_or(0)
    );
    Ok(out.trim_end().to_string())
}
