#pragma once

#include "hssnt/kahler.hpp"

namespace hssnt {

// Model together with its root and Kahler data; everything downstream takes one of these.
struct Space {
  Model model;
  RootDatum roots;
  KahlerData kahler;
  PolydiskData poly;
  double tripotent_scale = 1.0;  // spectral norm of H~_1 in the defining representation
};

Space make_space(const SpaceSpec& spec);

}  // namespace hssnt
