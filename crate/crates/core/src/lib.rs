//! Computations with congruence classes of the free monoid and the finite
//! J-trivial monoids they generate.
//!
//! The library works with words over a declared finite alphabet and a family
//! of congruences on the free monoid (`t1`, `gamma`, `lambda`, `rho`, their
//! counting refinements and meets). Each of the four rewritable congruences
//! has a confluent rewriting system over a doubled alphabet `{a, a+}` whose
//! normal forms name the congruence classes. On top of that sit:
//!
//! * the subword order on classes and its finite downward closures,
//! * the Rees-quotient construction turning a finite set of classes into an
//!   explicit finite J-trivial monoid (multiplication table),
//! * a small finite-monoid laboratory (presentations via Knuth–Bendix,
//!   products, duals, submonoids, identification quotients, isomorphism
//!   search, monogenic monoids),
//! * an identity engine (identity satisfaction, identity families, bounded
//!   class-term checks, bounded equational equivalence).

pub mod congruence;
pub mod identity;
pub mod lab;
pub mod monoid;
pub mod order;
pub mod rees;
pub mod rewrite;
pub mod word;

pub use congruence::CongruenceKind;
pub use identity::{Identity, TauTermVerdict};
pub use lab::{Morphism, Presentation};
pub use monoid::{FiniteMonoid, FiniteSemigroup};
pub use order::{ClosureKind, TauWord, TauWordSet};
pub use rewrite::{ExtLetter, ExtWord, RewriteKind};
pub use word::{Alphabet, Letter, Word};
