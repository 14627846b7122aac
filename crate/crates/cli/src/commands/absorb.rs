use std::fmt::Write as _;

use cliquefactor::absorbers::{build_absorbing_set, full_pipeline, AbsorberRoute};
use cliquefactor::rational::{ratio, Rational};
use cliquefactor::{AbsorberParams, AugmentParams};

use crate::settings::Ratio;
use crate::{AbsorbArgs, CliResult, Ctx};

fn params(ctx: &mut Ctx, a: &AbsorbArgs) -> CliResult<(AbsorberParams, Rational)> {
    let r: usize = ctx.settings.get("r", a.base.r, 4)?;
    let mu = ctx.settings.get("mu", a.mu, Ratio(ratio(1, 10)))?.0;
    let xi = ctx.settings.get("xi", a.xi, Ratio(ratio(1, 10)))?.0;
    let defaults = AbsorberParams::with_defaults(r, mu, xi)?;
    let t: usize = ctx.settings.get("t", a.t, defaults.t)?;
    let phi = ctx.settings.get("phi", a.phi, Ratio(defaults.phi))?.0;
    Ok((AbsorberParams::new(r, t, phi, xi)?, mu))
}

pub fn absorb(ctx: &mut Ctx, a: AbsorbArgs) -> CliResult<()> {
    ctx.command = "absorb";
    let (p, _) = params(ctx, &a)?;
    let g = ctx.graph(a.base.graph)?;
    let set = build_absorbing_set(&g, &p, ctx.seed, &ctx.guards)?;
    let mut body = format!(
        "set {}\nsize {}\nbudget {}\nbudget_reached {}\ncertificate {}\n",
        set.set,
        set.set.len(),
        set.budget,
        set.budget_reached,
        set.certificate.as_str()
    );
    for (i, ab) in set.absorbers.iter().enumerate() {
        let route = match &ab.route {
            AbsorberRoute::Diamond { paths, .. } => format!("diamond/{}", paths.iter().map(|p| p.len().to_string()).collect::<Vec<_>>().join(",")),
            AbsorberRoute::Grouping => "grouping".into(),
        };
        writeln!(body, "absorber {i} s {} | body {} | route {route}", ab.s_set, ab.body).ok();
    }
    ctx.emit(&body)
}

pub fn factor(ctx: &mut Ctx, a: AbsorbArgs) -> CliResult<()> {
    ctx.command = "factor";
    let (p, mu) = params(ctx, &a)?;
    let g = ctx.graph(a.base.graph)?;
    let tenth = ratio(1, 10);
    let ap = AugmentParams::new(p.r.max(3), tenth, mu, None, tenth)?;
    let rep = full_pipeline(&g, &p, &ap, ctx.seed, &ctx.guards)?;
    let mut body = String::new();
    for s in &rep.stages {
        writeln!(body, "stage {} {} {}", s.stage.as_str(), if s.ok { "ok" } else { "failed" }, s.detail).ok();
    }
    writeln!(body, "perfect {}", if rep.perfect { "yes" } else { "no" }).ok();
    if let Some(stage) = rep.failed_stage() {
        writeln!(body, "failed_stage {}", stage.as_str()).ok();
    }
    body.push_str(&rep.tiling.clone().canonical().to_text());
    ctx.emit(&body)
}
