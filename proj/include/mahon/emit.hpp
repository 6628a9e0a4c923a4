#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mahon/insertion.hpp"
#include "mahon/laurent.hpp"
#include "mahon/macdonald.hpp"

namespace mahon {

enum class Format { Text, Tsv, Json };
Format format_from_name(const std::string& name);

std::string json_escape(const std::string& s);

struct StatsPayload {
  std::string partition;
  long long inv = 0, maj = 0, dinv = 0, minimaj = 0;
};
std::string emit_stats(Format f, const StatsPayload& p);

struct EnumeratedItem {
  std::string blocks;   // bar form
  std::string starred;  // starred form
};
std::string emit_enumeration(Format f, const std::vector<EnumeratedItem>& items);

struct DistRow {
  std::string alpha;
  int k = 0;
  std::string stat;
  Laurent poly;
};
std::string emit_distributions(Format f, const std::vector<DistRow>& rows);

std::string emit_trace(Format f, const std::vector<PsiTraceRow>& rows,
                       const std::string& result);

std::string emit_schur(Format f,
                       const std::vector<std::pair<Partition, Laurent>>& coeffs);

std::string emit_polynomial(Format f, const Laurent& p);

struct VerifyRow {
  std::string suite;
  bool ok = true;
  long long checked = 0;
  std::string detail;
};
std::string emit_verify(Format f, const std::vector<VerifyRow>& rows);

}  // namespace mahon
