#include "horo/csv.hpp"

#include <charconv>

namespace horo {

std::string format_number(double v) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

void write_distortion_csv(std::ostream& os, const std::vector<DistortionRow>& rows) {
  os << "pair_id,extrinsic,intrinsic,ratio\n";
  for (const auto& r : rows)
    os << r.pair_id << ',' << format_number(r.extrinsic) << ',' << format_number(r.intrinsic) << ','
       << format_number(r.ratio) << '\n';
}

void write_control_csv(std::ostream& os, const std::vector<ControlRow>& rows) {
  os << "a,extrinsic,intrinsic_exact,intrinsic_net\n";
  for (const auto& r : rows)
    os << format_number(r.a) << ',' << format_number(r.extrinsic) << ',' << format_number(r.intrinsic_exact) << ','
       << format_number(r.intrinsic_net) << '\n';
}

void write_fill_csv(std::ostream& os, const std::vector<FillRow>& rows) {
  os << "loop_id,boundary_length,area,n_triangles\n";
  for (const auto& r : rows)
    os << r.loop_id << ',' << format_number(r.boundary_length) << ',' << format_number(r.area) << ','
       << r.n_triangles << '\n';
}

}  // namespace horo
