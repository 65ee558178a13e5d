#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace consign::npy {

// Minimal reader/writer for the `.npy` array container, format version 1.0,
// little-endian, C order. Supported dtypes: '<f8', '|u1', '<u8'.

struct array {
  std::string dtype;             // one of "<f8", "|u1", "<u8"
  std::vector<size_t> shape;     // C-order dims
  std::vector<double> f8;        // filled when dtype == "<f8"
  std::vector<uint8_t> u1;       // filled when dtype == "|u1"
  std::vector<uint64_t> u8;      // filled when dtype == "<u8"

  size_t elements() const {
    size_t n = 1;
    for (size_t d : shape) n *= d;
    return n;
  }
};

array read(const std::string& path);

// Header-only probe: dtype and shape without loading the payload.
array read_header(const std::string& path);

void write_f8(const std::string& path, const std::vector<size_t>& shape, const double* data);
void write_u1(const std::string& path, const std::vector<size_t>& shape, const uint8_t* data);
void write_u8(const std::string& path, const std::vector<size_t>& shape, const uint64_t* data);

}  // namespace consign::npy
