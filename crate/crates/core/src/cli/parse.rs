use super::lexer::{err, tokenize, Cursor, Tok};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::modfree::{GradedFreeModule, RingMatrix};
use crate::ring::{Monomial, MonomialOrder, Polynomial, PrimeField, Ring, Scalar, MAX_EXPONENT};
use crate::ropes::{line_ring, RopeSpec};

/// A parsed ideal file: the ring header and the generators in input order.
#[derive(Clone, Debug)]
pub struct IdealFile {
    pub ring: Ring,
    pub generators: Vec<Polynomial>,
}

impl IdealFile {
    pub fn ideal(&self) -> Result<Ideal> {
        Ideal::new(&self.ring, self.generators.clone())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ParseOptions {
    pub allow_inhomogeneous: bool,
    /// Replaces the characteristic given in the header.
    pub characteristic: Option<u32>,
    /// Replaces the order given in the header.
    pub order: Option<MonomialOrder>,
}

fn ends_poly(t: &Tok) -> bool {
    matches!(t, Tok::Sym(',') | Tok::Sym(';') | Tok::Newline | Tok::Eof)
}

fn parse_factor(cur: &mut Cursor, ring: &Ring, coef: &mut Scalar, exps: &mut [u32]) -> Result<()> {
    let k = ring.field();
    let t = cur.peek().clone();
    match t.tok {
        Tok::Int(_) => {
            let (v, _, _) = cur.expect_int()?;
            let mut c = k.from_u64(v);
            if cur.eat_sym('^') {
                let (e, _, _) = cur.expect_int()?;
                c = k.pow(c, e);
            }
            *coef = k.mul(*coef, c);
        }
        Tok::Ident(ref name) => {
            let Some(i) = ring.var_index(name) else {
                return err(t.line, t.col, format!("unknown variable '{name}'"));
            };
            cur.next();
            let e = if cur.eat_sym('^') {
                let (e, l, c) = cur.expect_int()?;
                if e > MAX_EXPONENT as u64 {
                    return err(l, c, format!("exponent {e} exceeds {MAX_EXPONENT}"));
                }
                e as u32
            } else {
                1
            };
            exps[i] += e;
            if exps[i] > MAX_EXPONENT as u32 {
                return err(t.line, t.col, format!("exponent of {name} exceeds {MAX_EXPONENT}"));
            }
        }
        _ => return cur.fail(format!("expected a variable or an integer, found {}", cur.describe())),
    }
    Ok(())
}

/// `[+|-] term ((+|-) term)*` with `term = factor (* factor)*`.
pub fn parse_poly(cur: &mut Cursor, ring: &Ring) -> Result<Polynomial> {
    let k = ring.field();
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let neg = if cur.eat_sym('-') {
            true
        } else if cur.eat_sym('+') {
            false
        } else if first {
            false
        } else {
            break;
        };
        first = false;
        let mut coef: Scalar = 1;
        let mut exps = vec![0u32; ring.nvars()];
        parse_factor(cur, ring, &mut coef, &mut exps)?;
        while cur.eat_sym('*') {
            parse_factor(cur, ring, &mut coef, &mut exps)?;
        }
        if neg {
            coef = k.neg(coef);
        }
        terms.push((Monomial::from_exponents(&exps)?, coef));
    }
    if !ends_poly(&cur.peek().tok) {
        return cur.fail(format!("expected an operator or a separator, found {}", cur.describe()));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

fn parse_header(cur: &mut Cursor, opts: &ParseOptions) -> Result<Ring> {
    cur.expect_keyword("ring")?;
    cur.expect_keyword("char")?;
    cur.expect_sym('=')?;
    let (p, pl, pc) = cur.expect_int()?;
    let p = opts.characteristic.unwrap_or_else(|| u32::try_from(p).unwrap_or(0));
    let field = match PrimeField::new(p) {
        Ok(f) => f,
        Err(_) => return err(pl, pc, format!("characteristic {p} is not a supported prime")),
    };
    cur.expect_keyword("vars")?;
    cur.expect_sym('=')?;
    let (first, vl, vc) = cur.expect_ident()?;
    let mut names = vec![first];
    while cur.eat_sym(',') {
        names.push(cur.expect_ident()?.0);
    }
    cur.expect_keyword("order")?;
    cur.expect_sym('=')?;
    let (o, ol, oc) = cur.expect_ident()?;
    let order = match o.as_str() {
        "grevlex" => MonomialOrder::Grevlex,
        "lex" => MonomialOrder::Lex,
        _ => return err(ol, oc, format!("unknown order '{o}', expected grevlex or lex")),
    };
    cur.expect_sym(';')?;
    Ring::new(field, names, opts.order.unwrap_or(order)).or_else(|e| err(vl, vc, e.to_string()))
}

pub fn parse_ideal_file(text: &str, opts: &ParseOptions) -> Result<IdealFile> {
    let mut cur = Cursor::new(tokenize(text, false)?);
    let ring = parse_header(&mut cur, opts)?;
    cur.expect_keyword("gens")?;
    cur.expect_sym(':')?;
    if matches!(cur.peek().tok, Tok::Sym(';') | Tok::Eof) {
        return cur.fail("the generator list is empty");
    }
    let mut generators = vec![parse_poly(&mut cur, &ring)?];
    while cur.eat_sym(',') {
        generators.push(parse_poly(&mut cur, &ring)?);
    }
    cur.expect_sym(';')?;
    if cur.peek().tok != Tok::Eof {
        return cur.fail(format!("unexpected {} after the generator list", cur.describe()));
    }
    if !opts.allow_inhomogeneous {
        if let Some(index) = generators.iter().position(|g| !g.is_homogeneous()) {
            return Err(Error::Homogeneity {
                index,
                poly: generators[index].to_string(),
            });
        }
    }
    Ok(IdealFile { ring, generators })
}

/// The ideal in the input grammar.
pub fn emit_ideal(ideal: &Ideal) -> String {
    let r = ideal.ring();
    let order = match r.order() {
        MonomialOrder::Lex => "lex",
        _ => "grevlex",
    };
    let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
    format!(
        "ring char={} vars={} order={order};\ngens: {};\n",
        r.characteristic(),
        r.names().join(","),
        if gens.is_empty() { "0".to_string() } else { gens.join(",\n  ") }
    )
}

/// `rope n=<int> k=<int>` followed by the `n - 1` rows of `B`, entries separated by commas.
pub fn parse_rope_file(text: &str, p: u32) -> Result<RopeSpec> {
    let mut cur = Cursor::new(tokenize(text, true)?);
    cur.skip_newlines();
    cur.expect_keyword("rope")?;
    cur.expect_keyword("n")?;
    cur.expect_sym('=')?;
    let (n, nl, nc) = cur.expect_int()?;
    cur.expect_keyword("k")?;
    cur.expect_sym('=')?;
    let (k, kl, kc) = cur.expect_int()?;
    if !(3..=14).contains(&n) {
        return err(nl, nc, format!("n = {n} is out of range 3..14"));
    }
    let (n, k) = (n as usize, k as usize);
    if k > n - 1 {
        return err(kl, kc, format!("k = {k} exceeds the number of rows {}", n - 1));
    }
    let s = line_ring(p)?;
    let mut rows = Vec::new();
    if k > 0 {
        for _ in 0..n - 1 {
            if cur.peek().tok != Tok::Newline && cur.peek().tok != Tok::Eof {
                return cur.fail(format!("expected end of line, found {}", cur.describe()));
            }
            cur.skip_newlines();
            if cur.peek().tok == Tok::Eof {
                return cur.fail(format!("B needs {} rows, found {}", n - 1, rows.len()));
            }
            let mut row = vec![parse_poly(&mut cur, &s)?];
            while cur.eat_sym(',') {
                row.push(parse_poly(&mut cur, &s)?);
            }
            if row.len() != k {
                return cur.fail(format!("row {} has {} entries, expected {k}", rows.len() + 1, row.len()));
            }
            cur.eat_sym(';');
            rows.push(row);
        }
    } else {
        rows = vec![Vec::new(); n - 1];
    }
    cur.skip_newlines();
    if cur.peek().tok != Tok::Eof {
        return cur.fail(format!("unexpected {} after the last row of B", cur.describe()));
    }
    let target = GradedFreeModule::uniform(&s, n - 1, 1);
    let b = RingMatrix::from_rows(target, rows).map_err(|e| Error::SpecInvalid(e.to_string()))?;
    RopeSpec::new(n, b)
}
