#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace gstab {

/// GF(p^e) presented as GF(p)[x]/(modulus). Coefficients are listed from the
/// constant term up; the modulus is monic of degree e.
struct FieldSpec {
  int p = 2;
  int e = 1;
  std::vector<int> modulus;  // length e + 1, modulus.back() == 1

  bool operator==(const FieldSpec&) const = default;
};

/// Default modulus for GF(p^e): the Conway polynomial where tabulated,
/// otherwise the lexicographically first monic irreducible of degree e.
FieldSpec make_field_spec(int p, int e = 1);
/// Validates primality of p and irreducibility of the modulus.
FieldSpec make_field_spec(int p, int e, std::vector<int> modulus);

bool is_prime(long long n);
bool is_irreducible(int p, const std::vector<int>& poly);

/// A field element is the coefficient vector packed in base p:
/// value = sum c_i p^i. Zero is 0 and one is 1.
using Fq = std::uint32_t;

/// Arithmetic context for one field. Cheap to copy (shared tables).
class Field {
 public:
  Field() : Field(make_field_spec(2)) {}
  explicit Field(const FieldSpec& spec);

  const FieldSpec& spec() const { return data_->spec; }
  int p() const { return data_->spec.p; }
  int e() const { return data_->spec.e; }
  int q() const { return data_->q; }

  Fq add(Fq a, Fq b) const { return data_->add[a * data_->q + b]; }
  Fq sub(Fq a, Fq b) const { return add(a, data_->neg[b]); }
  Fq neg(Fq a) const { return data_->neg[a]; }
  Fq mul(Fq a, Fq b) const { return data_->mul[a * data_->q + b]; }
  /// Throws DivisionByZero on 0.
  Fq inv(Fq a) const;
  Fq pow(Fq a, long long k) const;
  Fq from_int(long long n) const;  // image of an integer in the prime field
  /// Coefficient i of a (the digit of x^i).
  int coefficient(Fq a, int i) const;
  Fq from_coefficients(const std::vector<int>& c) const;

  bool operator==(const Field& other) const { return data_ == other.data_ || spec() == other.spec(); }

 private:
  struct Data {
    FieldSpec spec;
    int q = 0;
    std::vector<Fq> add, mul, neg, inv;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace gstab
