//! Quantum cyclic-redundancy-check (QCRC) stabilizer codes.
//!
//! This crate builds `[[n, k]]` stabilizer codes out of classical CRC
//! polynomials over GF(2), decodes cyclic burst errors in time linear in the
//! block length, and measures decoding performance over a Markov-correlated
//! depolarizing channel.
//!
//! The pipeline, bottom to top:
//!
//! * [`gf2poly`]: polynomials over GF(2) and elements of the cyclic ring
//!   GF(2)\[X\]/(X^n - 1).
//! * [`pauli`]: Pauli strings, their binary symplectic images, and the
//!   alternating form that encodes commutation.
//! * [`crc`]: classical CRC codes `H = [I | r_1 ... r_k]`, burst detection
//!   and correction, and the "c-property" that underpins burst correction.
//! * [`quantum`]: the QCRC generator matrix `G = [H | B]` with
//!   `B = H(+l) + H(-l)`, syndromes by matrix and by polynomial arithmetic,
//!   and a table-driven reference decoder.
//! * [`decoder`]: the structured interleaved family built from
//!   `g = 1 + X^k + X^{2k} + ... + X^{(m-1)k}` and its linear-time fork-scan
//!   burst decoder.
//! * [`channel`]: a two-state Markov error channel and Monte-Carlo
//!   estimation of the error-free-decoding rate.
//!
//! # Quick start
//!
//! ```
//! use qcrc::{BinPoly, QcrcCode, StructuredCode};
//!
//! // A [[9,1]] code from the degree-8 all-ones polynomial.
//! let g: BinPoly = "111111111".parse().unwrap();
//! let code = QcrcCode::new(g, 9, None).unwrap();
//! assert_eq!(code.stabilizers()[0].to_string(), "XZZIIIZZX");
//!
//! // The same code as a structured (m, c, k) = (9, 2, 1) instance, with a
//! // decoder that corrects every cyclic burst of length <= 2.
//! let structured = StructuredCode::new(9, 2, 1).unwrap();
//! let error: qcrc::PauliString = "IIIYXIIII".parse().unwrap();
//! let syndrome = structured.code().syndrome(&error.to_symplectic());
//! assert_eq!(structured.decode(&syndrome).to_pauli(), error);
//! ```
//!
//! The `qcrc` binary exposes the same functionality as subcommands
//! (`construct`, `validate`, `table`, `decode`, `syndrome`, `simulate`,
//! `bench`), and the `examples/` directory has one runnable example per
//! capability.

mod bits;

pub mod channel;
pub mod crc;
pub mod decoder;
pub mod gf2poly;
pub mod pauli;
pub mod quantum;

mod binmat;
mod error;

pub use channel::{run_trials, sweep, write_csv, ChannelParams, Decoder, SimStats};
pub use crc::{for_each_burst, has_c_property, BurstDecoder, CrcCode, DEFAULT_BURST_CAP};
pub use decoder::{interleave, split_syndrome, ForkEvent, LookupTable, StructuredCode, SubcodeTrace};
pub use error::Error;
pub use gf2poly::{BinPoly, RingElem};
pub use pauli::{symplectic_form, GenMatrix, Pauli, PauliString, SympVec};
pub use quantum::{for_each_pauli_burst, GenericDecoder, QcrcCode, Syndrome};

pub type Result<T> = std::result::Result<T, Error>;
