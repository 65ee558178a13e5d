#include "consign/npy.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <memory>

#include "consign/errors.hpp"

static_assert(std::endian::native == std::endian::little, "little-endian host required");

namespace consign::npy {

namespace {

constexpr char kMagic[6] = {'\x93', 'N', 'U', 'M', 'P', 'Y'};

struct file_closer {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using file_ptr = std::unique_ptr<std::FILE, file_closer>;

[[noreturn]] void bad(const std::string& path, const std::string& why) {
  throw error(errc::bad_npy, path + ": " + why);
}

size_t dtype_size(const std::string& dtype) {
  if (dtype == "<f8" || dtype == "<u8") return 8;
  if (dtype == "|u1") return 1;
  return 0;
}

// Parses the header dict, e.g. {'descr': '<f8', 'fortran_order': False, 'shape': (3, 4), }
void parse_header(const std::string& path, const std::string& header, array& out) {
  auto find_value = [&](const char* key) -> size_t {
    size_t pos = header.find(key);
    if (pos == std::string::npos) bad(path, std::string("header missing ") + key);
    pos = header.find(':', pos);
    if (pos == std::string::npos) bad(path, "malformed header");
    ++pos;
    while (pos < header.size() && header[pos] == ' ') ++pos;
    return pos;
  };

  size_t p = find_value("'descr'");
  if (header[p] != '\'') bad(path, "malformed descr");
  size_t q = header.find('\'', p + 1);
  out.dtype = header.substr(p + 1, q - p - 1);
  if (dtype_size(out.dtype) == 0) bad(path, "unsupported dtype " + out.dtype);

  p = find_value("'fortran_order'");
  if (header.compare(p, 5, "False") != 0) bad(path, "fortran_order must be False");

  p = find_value("'shape'");
  if (header[p] != '(') bad(path, "malformed shape");
  ++p;
  out.shape.clear();
  while (p < header.size() && header[p] != ')') {
    while (p < header.size() && (header[p] == ' ' || header[p] == ',')) ++p;
    if (header[p] == ')') break;
    size_t v = 0;
    bool got = false;
    while (p < header.size() && header[p] >= '0' && header[p] <= '9') {
      v = v * 10 + (header[p] - '0');
      ++p;
      got = true;
    }
    if (!got) bad(path, "malformed shape");
    out.shape.push_back(v);
  }
}

array read_impl(const std::string& path, bool payload) {
  if (!std::filesystem::exists(path)) throw error(errc::missing_file, path + ": no such file");
  file_ptr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw error(errc::io_error, path + ": open failed");

  char magic[6];
  unsigned char ver[2];
  unsigned char len_le[2];
  if (std::fread(magic, 1, 6, f.get()) != 6 || std::memcmp(magic, kMagic, 6) != 0)
    bad(path, "bad magic");
  if (std::fread(ver, 1, 2, f.get()) != 2) bad(path, "truncated version");
  if (ver[0] != 1 || ver[1] != 0) bad(path, "unsupported format version");
  if (std::fread(len_le, 1, 2, f.get()) != 2) bad(path, "truncated header length");
  size_t hlen = size_t(len_le[0]) | (size_t(len_le[1]) << 8);

  std::string header(hlen, '\0');
  if (std::fread(header.data(), 1, hlen, f.get()) != hlen) bad(path, "truncated header");

  array out;
  parse_header(path, header, out);
  if (!payload) return out;

  size_t n = out.elements();
  size_t nbytes = n * dtype_size(out.dtype);
  auto read_exact = [&](void* dst) {
    if (std::fread(dst, 1, nbytes, f.get()) != nbytes) bad(path, "truncated payload");
  };
  if (out.dtype == "<f8") {
    out.f8.resize(n);
    read_exact(out.f8.data());
  } else if (out.dtype == "|u1") {
    out.u1.resize(n);
    read_exact(out.u1.data());
  } else {
    out.u8.resize(n);
    read_exact(out.u8.data());
  }
  return out;
}

void write_impl(const std::string& path, const std::string& dtype,
                const std::vector<size_t>& shape, const void* data) {
  std::string dict = "{'descr': '" + dtype + "', 'fortran_order': False, 'shape': (";
  for (size_t i = 0; i < shape.size(); ++i) {
    dict += std::to_string(shape[i]);
    if (shape.size() == 1 || i + 1 < shape.size()) dict += ",";
    if (i + 1 < shape.size()) dict += " ";
  }
  dict += "), }";
  // pad with spaces so that 10 + len(header) is a multiple of 64, newline-terminated
  size_t total = 10 + dict.size() + 1;
  size_t pad = (64 - total % 64) % 64;
  dict.append(pad, ' ');
  dict += '\n';

  file_ptr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw error(errc::io_error, path + ": open for write failed");

  size_t n = 1;
  for (size_t d : shape) n *= d;
  size_t nbytes = n * dtype_size(dtype);
  unsigned char len_le[2] = {static_cast<unsigned char>(dict.size() & 0xff),
                             static_cast<unsigned char>((dict.size() >> 8) & 0xff)};
  bool ok = std::fwrite(kMagic, 1, 6, f.get()) == 6;
  unsigned char ver[2] = {1, 0};
  ok = ok && std::fwrite(ver, 1, 2, f.get()) == 2;
  ok = ok && std::fwrite(len_le, 1, 2, f.get()) == 2;
  ok = ok && std::fwrite(dict.data(), 1, dict.size(), f.get()) == dict.size();
  ok = ok && std::fwrite(data, 1, nbytes, f.get()) == nbytes;
  if (!ok) throw error(errc::io_error, path + ": write failed");
}

}  // namespace

array read(const std::string& path) { return read_impl(path, true); }
array read_header(const std::string& path) { return read_impl(path, false); }

void write_f8(const std::string& path, const std::vector<size_t>& shape, const double* data) {
  write_impl(path, "<f8", shape, data);
}
void write_u1(const std::string& path, const std::vector<size_t>& shape, const uint8_t* data) {
  write_impl(path, "|u1", shape, data);
}
void write_u8(const std::string& path, const std::vector<size_t>& shape, const uint64_t* data) {
  write_impl(path, "<u8", shape, data);
}

}  // namespace consign::npy
