#pragma once

#include <kicked_top/classical.hpp>
#include <kicked_top/errors.hpp>
#include <kicked_top/measures.hpp>
#include <kicked_top/nelder_mead.hpp>
#include <kicked_top/reduction.hpp>
#include <kicked_top/spin.hpp>
#include <kicked_top/types.hpp>
