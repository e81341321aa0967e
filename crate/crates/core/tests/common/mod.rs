#![allow(dead_code)]

use artin::braid::{braid_to_artin, BraidWord, FramedPureBraid};
use artin::ArtinPresentation;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const MAX_STRANDS: usize = 5;
pub const MAX_BRAID_LEN: usize = 20;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A product of pure generators `A_ij^{±1}` with at most `MAX_BRAID_LEN`
/// Artin letters in total.
pub fn random_pure_braid(rng: &mut impl Rng, strands: usize) -> BraidWord {
    let mut word = BraidWord::identity(strands);
    if strands < 2 {
        return word;
    }
    loop {
        let i = rng.gen_range(1..strands);
        let j = rng.gen_range(i + 1..=strands);
        let mut g = BraidWord::pure_generator(strands, i, j).unwrap();
        if rng.gen_bool(0.5) {
            g = g.inverse();
        }
        if word.letters().len() + g.letters().len() > MAX_BRAID_LEN || rng.gen_ratio(1, 6) {
            return word;
        }
        word = word.then(&g).unwrap();
    }
}

pub fn random_framed(rng: &mut impl Rng, strands: usize) -> FramedPureBraid {
    let braid = random_pure_braid(rng, strands);
    let framings = (0..strands).map(|_| rng.gen_range(-4..=4)).collect();
    FramedPureBraid::new(braid, framings).unwrap()
}

pub fn random_presentation(rng: &mut impl Rng, strands: usize) -> (FramedPureBraid, ArtinPresentation) {
    let fp = random_framed(rng, strands);
    let p = braid_to_artin(&fp).unwrap();
    (fp, p)
}

/// Checks every group law on one random triple; `Err` names the first
/// failure.
pub fn check_group_laws(rng: &mut impl Rng) -> Result<(), String> {
    use artin::braid::artin_inverse;
    use artin::r2::build_r2;
    use artin::Tuple3;

    let n = rng.gen_range(1..=MAX_STRANDS);
    let (f1, p1) = random_presentation(rng, n);
    let (f2, p2) = random_presentation(rng, n);
    let (_, p3) = random_presentation(rng, n);
    let ctx = |law: &str| format!("{law} failed for\n{f1}\n{f2}");

    for (fp, p) in [(&f1, &p1), (&f2, &p2)] {
        let m = p.exponent_matrix();
        if !m.is_symmetric() {
            return Err(ctx("symmetry"));
        }
        if (0..n).any(|i| *m.get(i, i) != fp.framings()[i]) {
            return Err(ctx("framing diagonal"));
        }
    }
    let p12 = p1.compose(&p2).map_err(|e| format!("{}: {e}", ctx("compose")))?;
    if !p12.as_candidate().is_artin() {
        return Err(ctx("is_artin closure"));
    }
    if p12.exponent_matrix() != &p1.exponent_matrix() + &p2.exponent_matrix() {
        return Err(ctx("additivity"));
    }
    let left = p12.compose(&p3).unwrap();
    let right = p1.compose(&p2.compose(&p3).unwrap()).unwrap();
    if left != right {
        return Err(ctx("associativity"));
    }
    if braid_to_artin(&f1.then(&f2).unwrap()).unwrap() != p12 {
        return Err(ctx("functoriality"));
    }
    let inv = artin_inverse(&f1).unwrap();
    let id = ArtinPresentation::identity(n);
    if inv.compose(&p1).unwrap() != id || p1.compose(&inv).unwrap() != id {
        return Err(ctx("inverse"));
    }
    let mut t = || Tuple3::new(rng.gen_range(-20..=20), rng.gen_range(-20..=20), rng.gen_range(-20..=20));
    let (s, u) = (t(), t());
    if build_r2(s).compose(&build_r2(u)).unwrap() != build_r2(s + u) {
        return Err(format!("tuple addition failed for ({s}) + ({u})"));
    }
    Ok(())
}

pub mod golden {
    use std::fs;
    use std::path::{Path, PathBuf};

    pub fn dir() -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
    }

    /// Case names, sorted, from the `.cmd` files.
    pub fn cases() -> Vec<String> {
        let mut names: Vec<String> = fs::read_dir(dir())
            .unwrap()
            .filter_map(|e| {
                let p = e.unwrap().path();
                (p.extension()? == "cmd").then(|| p.file_stem().unwrap().to_string_lossy().into_owned())
            })
            .collect();
        names.sort();
        names
    }

    /// `exit=<code>` followed by stdout. Arguments starting with `@` name
    /// files in the golden directory; `<case>.stdin` feeds `-`.
    pub fn render(case: &str) -> (String, String) {
        let d = dir();
        let cmd = fs::read_to_string(d.join(format!("{case}.cmd"))).unwrap();
        let mut argv = vec!["artin".to_string()];
        argv.extend(cmd.split_whitespace().map(|a| match a.strip_prefix('@') {
            Some(f) => d.join(f).to_string_lossy().into_owned(),
            None => a.to_string(),
        }));
        let stdin = fs::read_to_string(d.join(format!("{case}.stdin"))).unwrap_or_default();
        let out = artin::cli::run(&argv, &mut stdin.as_bytes());
        (format!("exit={}\n{}", out.code, out.stdout), out.stderr)
    }

    /// Compares against `<case>.expected`. With `GOLDEN_BLESS=1` a missing
    /// file is written instead.
    pub fn check(case: &str) -> Result<(), String> {
        let (got, stderr) = render(case);
        let path = dir().join(format!("{case}.expected"));
        match fs::read_to_string(&path) {
            Ok(want) if want == got => Ok(()),
            Ok(want) => Err(format!("{case}: expected\n{want}got\n{got}stderr: {stderr}")),
            Err(_) if std::env::var_os("GOLDEN_BLESS").is_some() => {
                fs::write(&path, got).unwrap();
                Ok(())
            }
            Err(_) => Err(format!("{case}: no expected output recorded")),
        }
    }
}
