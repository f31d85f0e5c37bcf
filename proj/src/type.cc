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

#include "seclint/type.h"

#include <utility>

namespace seclint {

const char* TypeCategoryName(TypeCategory category) {
  switch (category) {
    case TypeCategory::kVoid: return "void";
    case TypeCategory::kPlainChar: return "char";
    case TypeCategory::kSignedChar: return "signed char";
    case TypeCategory::kUnsignedChar: return "unsigned char";
    case TypeCategory::kSignedInt: return "signed int";
    case TypeCategory::kUnsignedInt: return "unsigned int";
    case TypeCategory::kFloating: return "floating";
    case TypeCategory::kPointer: return "pointer";
    case TypeCategory::kArray: return "array";
    case TypeCategory::kStruct: return "struct";
    case TypeCategory::kFunction: return "function";
  }
  return "?";
}

TypeDesc TypeDesc::PointerTo(TypeDesc pointee) {
  TypeDesc t(TypeCategory::kPointer, kPointerSize);
  t.element_ = std::make_shared<const TypeDesc>(std::move(pointee));
  return t;
}

TypeDesc TypeDesc::ArrayOf(TypeDesc element,
                           std::optional<std::uint64_t> extent) {
  std::optional<std::uint64_t> size;
  if (extent && element.byte_size()) size = *extent * *element.byte_size();
  TypeDesc t(TypeCategory::kArray, size);
  t.extent_ = extent;
  t.element_ = std::make_shared<const TypeDesc>(std::move(element));
  return t;
}

TypeDesc TypeDesc::Struct(std::string tag) {
  TypeDesc t(TypeCategory::kStruct, std::nullopt);
  t.tag_ = std::move(tag);
  return t;
}

TypeDesc TypeDesc::Function(TypeDesc return_type) {
  TypeDesc t(TypeCategory::kFunction, std::nullopt);
  t.element_ = std::make_shared<const TypeDesc>(std::move(return_type));
  return t;
}

TypeDesc TypeDesc::Decay() const {
  if (category_ == TypeCategory::kArray) return PointerTo(element());
  return *this;
}

std::string TypeDesc::ToString() const {
  std::string prefix = is_const_ ? "const " : "";
  switch (category_) {
    case TypeCategory::kPointer:
      return prefix + element().ToString() + " *";
    case TypeCategory::kArray:
      return prefix + element().ToString() + "[" +
             (extent_ ? std::to_string(*extent_) : std::string()) + "]";
    case TypeCategory::kStruct:
      return prefix + "struct " + tag_;
    case TypeCategory::kFunction:
      return element().ToString() + "()";
    case TypeCategory::kSignedInt:
    case TypeCategory::kUnsignedInt: {
      std::string base = category_ == TypeCategory::kSignedInt ? "int" : "unsigned";
      if (byte_size_ == 2) base += " short";
      if (byte_size_ == 8) base += " long";
      return prefix + base;
    }
    default:
      return prefix + TypeCategoryName(category_);
  }
}

bool TypeDesc::operator==(const TypeDesc& other) const {
  if (category_ != other.category_ || byte_size_ != other.byte_size_ ||
      extent_ != other.extent_ || tag_ != other.tag_ ||
      is_const_ != other.is_const_) {
    return false;
  }
  if ((element_ == nullptr) != (other.element_ == nullptr)) return false;
  return element_ == nullptr || *element_ == *other.element_;
}

}  // namespace seclint
