#pragma once

#include <memory>
#include <optional>
#include <string>

#include "ainf/algebra.hpp"
#include "ainf/bimod.hpp"
#include "ainf/diagrams.hpp"
#include "ainf/hoch.hpp"
#include "ainf/iprod.hpp"
#include "ainf/morph.hpp"

// JSON structure files. Parse errors throw InputError prefixed with a JSON path,
// e.g. "ops[1].entries[0].in[2]: unknown generator 'q'".
namespace ainf::io {

std::string read_file(const std::string& path);

std::shared_ptr<const AInfAlgebra> parse_algebra(const std::string& text);
std::string emit_algebra(const AInfAlgebra& alg);

// Operations use "arity": [k, l]; "in" lists k algebra names, one module name, l algebra names.
std::shared_ptr<const AInfBimodule> parse_bimodule(const std::string& text, std::shared_ptr<const AInfAlgebra> alg,
                                                   BimoduleKind kind = BimoduleKind::General);
std::string emit_bimodule(const AInfBimodule& bm);

// Inputs name source generators at the module slot, outputs name target generators.
std::shared_ptr<const BimoduleMorphism> parse_morphism(const std::string& text,
                                                       std::shared_ptr<const AInfBimodule> source,
                                                       std::shared_ptr<const AInfBimodule> target);
std::string emit_morphism(const BimoduleMorphism& f);

// Entries carry "scalar" instead of "out"; "in" has k+l+2 algebra names.
std::shared_ptr<const InnerProduct> parse_inner_product(const std::string& text,
                                                        std::shared_ptr<const AInfAlgebra> alg);
std::string emit_inner_product(const InnerProduct& ip);

// Plain arities (components f_j), outputs in the coefficient module, optional
// "degree" for the suspended cochain degree.
HochschildCochain parse_cochain(const std::string& text, std::shared_ptr<const AInfBimodule> coefficients);
std::string emit_cochain(const HochschildCochain& c);

diagrams::Diagram parse_diagram(const std::string& text);
std::string emit_diagram(const diagrams::Diagram& d);

std::string report_json(const CheckReport& r);
std::string report_text(const CheckReport& r);

}  // namespace ainf::io
