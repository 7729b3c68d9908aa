#pragma once

#include <string>
#include <vector>

#include "esing/classify.hpp"
#include "esing/decompose.hpp"
#include "esing/verify.hpp"

namespace esing::jsonio {

// All documents are emitted with sorted keys and rationals as "num/den"
// strings, so identical inputs produce byte-identical output. `pretty`
// switches from compact single-line JSON to 2-space indentation.

std::string classify_document(const Classification& cls, const Certificate& cert,
                              const std::vector<std::string>* explain, bool pretty);

/// Certificate with the reduction steps appended; the certificate's
/// normalized jet is the reduced jet.
std::string reduce_document(const Classification& cls, const Certificate& cert, bool replay_ok,
                            bool pretty);

std::string decompose_document(const Decomposition& dec, unsigned working_order, bool pretty);

std::string verify_document(const VerifyReport& report, bool pretty);

std::string error_document(const std::string& code, const std::string& message, int line,
                           int column, bool pretty);

// ---- replay: read a chain back out of an emitted document --------------

std::vector<TransformStep> parse_transform_chain(const std::string& document);
PolyJet parse_normalized_jet(const std::string& document);

}  // namespace esing::jsonio
