//! Printing then parsing random expression trees and operation terms is the identity.

use std::sync::Arc;

use proptest::prelude::*;

use semistar::domain::parse_domain;
use semistar::expr::{parse_expr, print_expr, BinOp, Expr, Func, Gen};
use semistar::syntax::parse_op;
use semistar_core::algebra::GroupElement;
use semistar_core::classify::{SampleSpec, Sampler};
use semistar_core::semistar::{DomainHandle, Family, OverringTag, PrimeTag, SemistarOp};

#[derive(Clone, Debug)]
enum Tree {
    Leaf(u8, u64),
    Bin(u8, Box<Tree>, Box<Tree>),
    Call(u8, Box<Tree>),
}

fn tree() -> impl Strategy<Value = Tree> {
    let leaf = (0u8..6, any::<u64>()).prop_map(|(k, s)| Tree::Leaf(k, s));
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (0u8..4, inner.clone(), inner.clone()).prop_map(|(k, a, b)| Tree::Bin(k, Box::new(a), Box::new(b))),
            (0u8..9, inner).prop_map(|(k, a)| Tree::Call(k, Box::new(a))),
        ]
    })
}

fn op_of(k: u8) -> SemistarOp {
    let v = OverringTag::ValuationHull;
    match k % 7 {
        0 => SemistarOp::Identity,
        1 => SemistarOp::V,
        2 => SemistarOp::t(),
        3 => SemistarOp::bar(SemistarOp::StarOverring(v)),
        4 => SemistarOp::tilde(SemistarOp::ft(SemistarOp::V)),
        5 => SemistarOp::descent(SemistarOp::Identity, v),
        _ => SemistarOp::spectral(&[PrimeTag::Maximal]),
    }
}

fn build(t: &Tree, d: &Arc<DomainHandle>) -> Expr {
    let numsgr = matches!(d.family(), Family::SemigroupRing(_));
    match t {
        Tree::Leaf(k, seed) => match k {
            0 => Expr::Ring,
            1 => Expr::Maximal,
            2 if !numsgr => Expr::Hull,
            3 => Expr::Field,
            _ => {
                let mut s = Sampler::new(d, &SampleSpec::default().with_seed(*seed));
                let gens = (0..1 + seed % 3)
                    .map(|_| {
                        let g = s.monomial();
                        match (numsgr, &g.level) {
                            (true, GroupElement::Int(n)) => Gen::Power(*n),
                            _ => Gen::Term(g),
                        }
                    })
                    .collect();
                Expr::Gens(gens)
            }
        },
        Tree::Bin(k, a, b) => {
            let op = [BinOp::Colon, BinOp::Meet, BinOp::Sum, BinOp::Product][*k as usize];
            Expr::Bin(op, Box::new(build(a, d)), Box::new(build(b, d)))
        }
        Tree::Call(k, a) => {
            let f = match k {
                0 if !numsgr => Func::V,
                0 | 1 => Func::T,
                2 => Func::W,
                3 => Func::Inv,
                4 => Func::Ft(op_of(*k)),
                5 => Func::Bar(op_of(*k)),
                6 => Func::Tilde(op_of(*k)),
                7 => Func::Star(if numsgr { OverringTag::IntegralClosure } else { OverringTag::ValuationHull }),
                _ => Func::Apply(op_of(*k)),
            };
            Expr::Call(f, Box::new(build(a, d)))
        }
    }
}

fn domains() -> Vec<Arc<DomainHandle>> {
    [
        "family=numsgr generators=[3,4,5]",
        "family=pullback extension=a^2-2 group=Q",
        "family=pullback base_field=Fp:3 extension=a^2+1 group=Z",
        "family=valuation group=ZxZ_lex",
    ]
    .iter()
    .map(|t| parse_domain(t).unwrap())
    .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn expressions_round_trip(t in tree(), which in 0usize..4) {
        let d = &domains()[which];
        let e = build(&t, d);
        let printed = print_expr(&e, d);
        let back = parse_expr(&printed, d);
        prop_assert_eq!(back.as_ref().ok(), Some(&e), "{} -> {:?}", printed, back);
    }

    #[test]
    fn operation_terms_round_trip(k in 0u8..7, wrap in 0u8..5) {
        let inner = op_of(k);
        let op = match wrap {
            0 => inner,
            1 => SemistarOp::ft(inner),
            2 => SemistarOp::bar(inner),
            3 => SemistarOp::ascent(inner, OverringTag::IntegralClosure),
            _ => SemistarOp::tilde(SemistarOp::spectral(&[PrimeTag::Height1, PrimeTag::Maximal])),
        };
        let term = op.to_term();
        prop_assert_eq!(parse_op(&term).ok(), Some(op), "{}", term);
    }
}
