use std::ops::Range;
use std::sync::Arc;

use crate::arith::{Field, FieldTag};

use super::{MonomialOrder, PolyError};

/// A named run of consecutive variables, e.g. the `y` block of `K[y, z, x]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableBlock {
    pub name: String,
    pub range: Range<usize>,
}

/// Polynomial ring over `F` with named variables and an active order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring<F: Field> {
    vars: Vec<String>,
    ctx: F::Ctx,
    order: MonomialOrder,
    blocks: Option<Vec<VariableBlock>>,
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl<F: Field> Ring<F> {
    pub fn new<S: AsRef<str>>(vars: &[S], ctx: F::Ctx) -> Result<Arc<Self>, PolyError> {
        Self::with_order_and_blocks(vars, ctx, MonomialOrder::DegRevLex, None)
    }

    pub fn with_order_and_blocks<S: AsRef<str>>(
        vars: &[S],
        ctx: F::Ctx,
        order: MonomialOrder,
        blocks: Option<Vec<VariableBlock>>,
    ) -> Result<Arc<Self>, PolyError> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(PolyError::InvalidRing(format!("bad variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(PolyError::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if !order.validate(vars.len()) {
            return Err(PolyError::InvalidRing("block sizes do not cover the variables".into()));
        }
        if let Some(bs) = &blocks {
            let mut next = 0;
            for b in bs {
                if b.range.start != next || b.range.end <= b.range.start {
                    return Err(PolyError::InvalidRing("blocks must partition the variables".into()));
                }
                next = b.range.end;
            }
            if next != vars.len() {
                return Err(PolyError::InvalidRing("blocks must partition the variables".into()));
            }
        }
        Ok(Arc::new(Ring {
            vars,
            ctx,
            order,
            blocks,
        }))
    }

    /// `prefix0, ..., prefix{count-1}`.
    pub fn indexed(prefix: &str, count: usize, ctx: F::Ctx) -> Result<Arc<Self>, PolyError> {
        let names: Vec<String> = (0..count).map(|i| format!("{prefix}{i}")).collect();
        Self::new(&names, ctx)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn field_tag(&self) -> FieldTag {
        F::tag(&self.ctx)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn blocks(&self) -> Option<&[VariableBlock]> {
        self.blocks.as_deref()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field, different active order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>, PolyError> {
        Self::with_order_and_blocks(&self.vars, self.ctx.clone(), order, self.blocks.clone())
    }

    pub fn zero(&self) -> F {
        F::zero(&self.ctx)
    }

    pub fn one(&self) -> F {
        F::one(&self.ctx)
    }

    pub fn scalar(&self, v: i64) -> F {
        F::from_i64(v, &self.ctx)
    }
}
