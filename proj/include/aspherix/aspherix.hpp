#pragma once

#include "aspherix/corpus.hpp"
#include "aspherix/errors.hpp"
#include "aspherix/fox.hpp"
#include "aspherix/group_model.hpp"
#include "aspherix/group_ring.hpp"
#include "aspherix/homology.hpp"
#include "aspherix/io/json.hpp"
#include "aspherix/presentation.hpp"
#include "aspherix/scalar.hpp"
#include "aspherix/smith.hpp"
#include "aspherix/trace_rank.hpp"
#include "aspherix/version.hpp"
#include "aspherix/word.hpp"
