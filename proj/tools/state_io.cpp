// Copyright 2026 The realqm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "state_io.hpp"

#include <fstream>
#include <sstream>

#include "report.hpp"

namespace rqm::cli {

namespace {

struct Header {
  PayloadKind kind;
  std::vector<int> dims;
  std::size_t dim;  // product
};

PayloadKind parse_kind(const std::string& text, const std::string& path) {
  if (text == "complex") return PayloadKind::complex_kind;
  if (text == "real") return PayloadKind::real_kind;
  if (text == "compact-real") return PayloadKind::compact_real;
  throw ConfigError(path + ": unknown payload kind '" + text + "'");
}

Header read_header(std::istream& in, const std::string& path, const char* magic) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError(path + ": empty file");
  std::stringstream ss(line);
  std::string tag;
  int version = 0;
  std::string kind_text;
  if (!(ss >> tag >> version >> kind_text))
    throw ConfigError(path + ": malformed header line");
  if (tag != magic)
    throw ConfigError(path + ": expected header tag '" + magic + "', found '" + tag + "'");
  if (version != 1) throw ConfigError(path + ": unsupported format version");
  Header h{parse_kind(kind_text, path), {}, 1};
  int d;
  while (ss >> d) {
    if (d < 2) throw ConfigError(path + ": local dimension must be >= 2");
    h.dims.push_back(d);
    h.dim *= static_cast<std::size_t>(d);
  }
  if (h.dims.empty()) throw ConfigError(path + ": header lists no dimensions");
  return h;
}

std::vector<double> read_numbers(std::istream& in, std::size_t count, const std::string& path) {
  std::vector<double> out;
  out.reserve(count);
  double x;
  while (out.size() < count && (in >> x)) out.push_back(x);
  if (out.size() < count)
    throw ConfigError(path + ": expected " + std::to_string(count) + " numbers, found " +
                      std::to_string(out.size()));
  if (in >> x) throw ConfigError(path + ": trailing data after payload");
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void write_header(std::ostream& out, const char* magic, PayloadKind kind,
                  const std::vector<int>& dims) {
  out << magic << " 1 " << payload_kind_name(kind);
  for (int d : dims) out << ' ' << d;
  out << '\n';
}

}  // namespace

const char* payload_kind_name(PayloadKind k) {
  switch (k) {
    case PayloadKind::complex_kind:
      return "complex";
    case PayloadKind::real_kind:
      return "real";
    case PayloadKind::compact_real:
      return "compact-real";
  }
  return "?";
}

VectorFile read_vector_file(const std::string& path) {
  std::ifstream in = open_input(path);
  const Header h = read_header(in, path, "realqm-state");
  VectorFile file{h.kind, h.dims, {}, {}, {}, {}};
  switch (h.kind) {
    case PayloadKind::complex_kind: {
      const auto nums = read_numbers(in, 2 * h.dim, path);
      file.complex_data = ComplexVector(h.dim);
      for (std::size_t i = 0; i < h.dim; ++i)
        file.complex_data[i] = cx(nums[2 * i], nums[2 * i + 1]);
      break;
    }
    case PayloadKind::real_kind: {
      const auto nums = read_numbers(in, h.dim, path);
      file.real_data = RealVector(h.dim);
      for (std::size_t i = 0; i < h.dim; ++i) file.real_data[i] = nums[i];
      break;
    }
    case PayloadKind::compact_real: {
      const auto nums = read_numbers(in, 2 * h.dim, path);
      file.re_part = RealVector(h.dim);
      file.im_part = RealVector(h.dim);
      for (std::size_t i = 0; i < h.dim; ++i) {
        file.re_part[i] = nums[i];
        file.im_part[i] = nums[h.dim + i];
      }
      break;
    }
  }
  return file;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in = open_input(path);
  const Header h = read_header(in, path, "realqm-operator");
  const std::size_t d = h.dim;
  MatrixFile file{h.kind, h.dims, {}, {}, {}, {}};
  switch (h.kind) {
    case PayloadKind::complex_kind: {
      const auto nums = read_numbers(in, 2 * d * d, path);
      file.complex_data = ComplexMatrix(d, d);
      for (std::size_t i = 0; i < d * d; ++i)
        file.complex_data.data()[i] = cx(nums[2 * i], nums[2 * i + 1]);
      break;
    }
    case PayloadKind::real_kind: {
      const auto nums = read_numbers(in, d * d, path);
      file.real_data = RealMatrix(d, d);
      for (std::size_t i = 0; i < d * d; ++i) file.real_data.data()[i] = nums[i];
      break;
    }
    case PayloadKind::compact_real: {
      const auto nums = read_numbers(in, 2 * d * d, path);
      file.re_block = RealMatrix(d, d);
      file.im_block = RealMatrix(d, d);
      for (std::size_t i = 0; i < d * d; ++i) {
        file.re_block.data()[i] = nums[i];
        file.im_block.data()[i] = nums[d * d + i];
      }
      break;
    }
  }
  return file;
}

void write_vector_file(const std::string& path, const VectorFile& file) {
  std::ofstream out = open_output(path);
  write_header(out, "realqm-state", file.kind, file.dims);
  switch (file.kind) {
    case PayloadKind::complex_kind:
      for (std::size_t i = 0; i < file.complex_data.size(); ++i)
        out << format_double(file.complex_data[i].real()) << ' '
            << format_double(file.complex_data[i].imag()) << '\n';
      break;
    case PayloadKind::real_kind:
      for (std::size_t i = 0; i < file.real_data.size(); ++i)
        out << format_double(file.real_data[i]) << '\n';
      break;
    case PayloadKind::compact_real:
      for (std::size_t i = 0; i < file.re_part.size(); ++i)
        out << format_double(file.re_part[i]) << '\n';
      for (std::size_t i = 0; i < file.im_part.size(); ++i)
        out << format_double(file.im_part[i]) << '\n';
      break;
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

namespace {

void write_matrix_rows(std::ostream& out, const RealMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

}  // namespace

void write_matrix_file(const std::string& path, const MatrixFile& file) {
  std::ofstream out = open_output(path);
  write_header(out, "realqm-operator", file.kind, file.dims);
  switch (file.kind) {
    case PayloadKind::complex_kind:
      for (std::size_t i = 0; i < file.complex_data.rows(); ++i) {
        for (std::size_t j = 0; j < file.complex_data.cols(); ++j) {
          if (j) out << ' ';
          out << format_double(file.complex_data(i, j).real()) << ' '
              << format_double(file.complex_data(i, j).imag());
        }
        out << '\n';
      }
      break;
    case PayloadKind::real_kind:
      write_matrix_rows(out, file.real_data);
      break;
    case PayloadKind::compact_real:
      write_matrix_rows(out, file.re_block);
      write_matrix_rows(out, file.im_block);
      break;
  }
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace rqm::cli
