#pragma once

#include "integer.hpp"
#include "quaternion.hpp"
#include "modular.hpp"
#include "decompose.hpp"
