// Copyright 2026 The seclint Authors.
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

#ifndef SECLINT_TYPE_H_
#define SECLINT_TYPE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace seclint {

// Simplified C type classification. Short and long collapse into
// SignedInt/UnsignedInt and differ only in byte_size; character types stay
// distinct because several rules care about char provenance.
enum class TypeCategory {
  kVoid,
  kPlainChar,
  kSignedChar,
  kUnsignedChar,
  kSignedInt,
  kUnsignedInt,
  kFloating,
  kPointer,
  kArray,
  kStruct,
  kFunction,
};

const char* TypeCategoryName(TypeCategory category);

// Immutable value type; pointee/element types are shared.
class TypeDesc {
 public:
  TypeDesc() : TypeDesc(TypeCategory::kSignedInt, std::nullopt) {}

  static TypeDesc Void() { return TypeDesc(TypeCategory::kVoid, std::nullopt); }
  static TypeDesc PlainChar() { return TypeDesc(TypeCategory::kPlainChar, 1); }
  static TypeDesc SignedChar() { return TypeDesc(TypeCategory::kSignedChar, 1); }
  static TypeDesc UnsignedChar() {
    return TypeDesc(TypeCategory::kUnsignedChar, 1);
  }
  static TypeDesc SignedInt(std::optional<std::uint64_t> size = 4) {
    return TypeDesc(TypeCategory::kSignedInt, size);
  }
  static TypeDesc UnsignedInt(std::optional<std::uint64_t> size = 4) {
    return TypeDesc(TypeCategory::kUnsignedInt, size);
  }
  static TypeDesc Floating(std::uint64_t size = 8) {
    return TypeDesc(TypeCategory::kFloating, size);
  }
  static TypeDesc Size() { return UnsignedInt(8); }
  static TypeDesc PointerTo(TypeDesc pointee);
  static TypeDesc ArrayOf(TypeDesc element,
                          std::optional<std::uint64_t> extent);
  static TypeDesc Struct(std::string tag);
  static TypeDesc Function(TypeDesc return_type);

  TypeCategory category() const { return category_; }
  std::optional<std::uint64_t> byte_size() const { return byte_size_; }
  std::optional<std::uint64_t> extent() const { return extent_; }
  const std::string& tag() const { return tag_; }
  bool is_const() const { return is_const_; }

  // Pointee for pointers, element for arrays, return type for functions.
  // Precondition: HasElement().
  const TypeDesc& element() const { return *element_; }
  bool HasElement() const { return element_ != nullptr; }

  TypeDesc WithConst(bool is_const) const {
    TypeDesc copy = *this;
    copy.is_const_ = is_const;
    return copy;
  }

  bool IsCharacter() const {
    return category_ == TypeCategory::kPlainChar ||
           category_ == TypeCategory::kSignedChar ||
           category_ == TypeCategory::kUnsignedChar;
  }
  bool IsInteger() const {
    return IsCharacter() || category_ == TypeCategory::kSignedInt ||
           category_ == TypeCategory::kUnsignedInt;
  }
  bool IsArithmetic() const {
    return IsInteger() || category_ == TypeCategory::kFloating;
  }
  bool IsPointer() const { return category_ == TypeCategory::kPointer; }
  bool IsArray() const { return category_ == TypeCategory::kArray; }
  bool IsPointerLike() const { return IsPointer() || IsArray(); }

  // Array-to-pointer decay; other types are returned unchanged.
  TypeDesc Decay() const;

  std::string ToString() const;

  bool operator==(const TypeDesc& other) const;

 private:
  TypeDesc(TypeCategory category, std::optional<std::uint64_t> byte_size)
      : category_(category), byte_size_(byte_size) {}

  TypeCategory category_;
  std::optional<std::uint64_t> byte_size_;
  std::optional<std::uint64_t> extent_;
  std::string tag_;
  bool is_const_ = false;
  std::shared_ptr<const TypeDesc> element_;
};

// LP64 data model.
inline constexpr std::uint64_t kPointerSize = 8;

}  // namespace seclint

#endif  // SECLINT_TYPE_H_
