#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "templap/assembly.hpp"

namespace templap {

namespace {

constexpr std::array<char, 8> kMagic = {'T', 'F', 'L', 'A', 'P', '0', '0', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<unsigned char, 8> bytes{};
  for (int k = 0; k < 8; ++k) bytes[k] = static_cast<unsigned char>(v >> (8 * k));
  out.write(reinterpret_cast<const char*>(bytes.data()), 8);
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), 8);
  if (!in) throw std::runtime_error("operator dump: truncated file");
  std::uint64_t v = 0;
  for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(bytes[k]) << (8 * k);
  return v;
}

void put_doubles(std::ostream& out, const std::vector<double>& values) {
  for (double x : values) put_u64(out, std::bit_cast<std::uint64_t>(x));
}

std::vector<double> get_doubles(std::istream& in, std::size_t n) {
  std::vector<double> values(n);
  for (auto& x : values) x = std::bit_cast<double>(get_u64(in));
  return values;
}

}  // namespace

void write_operator_dump(const std::filesystem::path& path,
                         const OperatorMatrix& op, const LoadVector& load) {
  if (load.values.size() != op.size())
    throw std::invalid_argument("operator dump: load vector length mismatch");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("operator dump: cannot open " + path.string());
  out.write(kMagic.data(), kMagic.size());
  put_u64(out, op.size());
  put_doubles(out, op.diag());
  put_doubles(out, op.toeplitz_col());
  put_doubles(out, load.values);
  if (!out) throw std::runtime_error("operator dump: write failed for " + path.string());
}

OperatorDump read_operator_dump(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("operator dump: cannot open " + path.string());
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic)
    throw std::runtime_error("operator dump: bad magic in " + path.string());
  const std::uint64_t m = get_u64(in);
  OperatorDump dump;
  dump.diag = get_doubles(in, m);
  dump.toeplitz_col = get_doubles(in, m);
  dump.load = get_doubles(in, m);
  return dump;
}

}  // namespace templap
