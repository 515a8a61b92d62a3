//! Text grammar and JSON serialization of ring elements.

mod parse;
mod print;

pub use parse::{parse_degree, parse_element, parse_index};
pub use print::{
    element_from_json, element_to_json, element_to_json_value, format_element, proj_to_json,
    JsonElement, JsonMonomial, JsonProjElement, JsonProjTerm, JsonTerm,
};
