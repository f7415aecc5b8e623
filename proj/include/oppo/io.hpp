// JSON loading for structures, multisets, matrices and negation generators.
#pragma once

#include <string>

#include "oppo/instances.hpp"

namespace oppo {

class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"name": str, "elements": [str,...], "neg": {str: str,...},
///  "order": {"kind": "cover"|"full", "pairs": [[str,str],...]}}
/// neg must map every element; unknown element names are an error.
/// kind defaults to "cover".
RawStructure structure_from_json_text(const std::string& text);
RawStructure load_structure_file(const std::string& path);

/// {"entries": {key: integer, ...}}
SignedMultiset multiset_from_json_text(const std::string& text);
SignedMultiset load_multiset_file(const std::string& path);

/// {"n": dim, "entries": [[re, im], ...]} with n*n row-major entries.
ComplexMatrix matrix_from_json_text(const std::string& text);
ComplexMatrix load_matrix_file(const std::string& path);

/// {"kind": "identity"} or {"kind": "power", "p": 2.0}
/// or {"kind": "table", "xs": [...], "ys": [...]}
NegationGenerator phi_from_json_text(const std::string& text);
NegationGenerator load_phi_file(const std::string& path);

}  // namespace oppo
