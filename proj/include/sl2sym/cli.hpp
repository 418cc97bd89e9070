#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl2sym/symfunc.hpp"
#include "sl2sym/young.hpp"

namespace sl2sym {

using Json = nlohmann::ordered_json;

/// Terms as [{"coefficient": "num/den", "partition": [...]}], sorted by size
/// and then by partition, lexicographically descending.
Json terms_json(const std::map<Partition, Rational>& terms);

/// Result document for an element of Λₙ or of the diagram space.
/// `n` is null for unbounded diagrams, `d` is null when absent.
Json result_document(const std::string& basis, std::optional<int> n, std::optional<int> d,
                     const std::map<Partition, Rational>& terms, const std::string& command, const Json& inputs);

/// Runs one command line (without the program name). Returns the exit
/// code: 0 on success, 1 when a verification check fails, 2 on usage or
/// evaluation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sl2sym
