#pragma once

#include "serrant/alignment.hpp"
#include "serrant/base_classifier.hpp"
#include "serrant/combiner.hpp"
#include "serrant/corpus_io.hpp"
#include "serrant/errors.hpp"
#include "serrant/pipeline.hpp"
#include "serrant/report.hpp"
#include "serrant/sercl.hpp"
#include "serrant/text.hpp"
#include "serrant/ud.hpp"
