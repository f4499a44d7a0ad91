#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "vngeom/block_decomposition.hpp"
#include "vngeom/channels.hpp"
#include "vngeom/characters.hpp"
#include "vngeom/convexity.hpp"
#include "vngeom/error.hpp"
#include "vngeom/posdef.hpp"
#include "vngeom/vn_structure.hpp"

// JSON interchange. Every parser throws MalformedInput on shape or type errors.
namespace vngeom::json {

using nlohmann::json;

/// Parses text; MalformedInput on syntax errors.
json parse(const std::string& text);
json read_file(const std::filesystem::path& path);

/// {"order": n, "cayley": [[...]], "labels": [...]}
json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

/// A group given inline, as a path to a group file, or as a kind string such
/// as "dihedral:4".
FiniteGroup resolve_group(const json& j, const std::filesystem::path& base_dir = {});

/// {"group": ..., "re": [...], "im": [...]}; "im" may be omitted.
json to_json(const GroupFunction& phi);
GroupFunction function_from_json(const json& j, const std::filesystem::path& base_dir = {});
/// Values only, on a known group.
CVector vector_from_json(const json& j, std::size_t n);
json vector_to_json(const CVector& v);

/// {"rows": r, "cols": c, "re": [...], "im": [...]}, row-major.
json to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

/// {"dims": [...], "class_sizes": [...], "chars_re": [[...]], "chars_im": [[...]], ...}
json to_json(const CharacterTable& table);

json to_json(const ConjugacyPartition& classes);
json to_json(const PsdVerdict& v);
json to_json(const ChoiCertificate& cert, bool include_matrices);
json to_json(const FourierMultiplierChannel& ch);
FourierMultiplierChannel channel_from_json(const json& j, const std::filesystem::path& base_dir = {});
json to_json(const FaceDescriptor& face);
json to_json(const StateDecomposition& d);
json to_json(const VNInvariant& inv);
json to_json(const BlockDecomposition& decomp, bool include_units);

/// {"sigma": [...], "unitaries": [matrix...], "transpose": [bool...]}
json to_json(const AffineHomeoDescriptor& desc);
AffineHomeoDescriptor descriptor_from_json(const json& j);

json to_json(const AffineHomeomorphism& t);
json to_json(const HomeoGroupDescription& d);

/// {"error": name, "message": ..., "witness": ...}
json to_json(const Error& e);

}  // namespace vngeom::json
