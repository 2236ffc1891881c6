// Copyright 2026 The MRA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mra/translator.hpp"

namespace mra::translator {

// Demo vocabulary for the offline translator. Sources are matched as plain
// substrings, so every entry is a distinctive multi-letter phrase; short
// function words are deliberately absent.
std::map<std::string, PhraseTable> DefaultPhraseTables() {
  std::map<std::string, PhraseTable> tables;
  tables["pt"] = {
      {"derrame pleural", "pleural effusion"},
      {"derrame pericárdico", "pericardial effusion"},
      {"lobo inferior direito", "right lower lobe"},
      {"lobo superior direito", "right upper lobe"},
      {"lobo inferior esquerdo", "left lower lobe"},
      {"lobo superior esquerdo", "left upper lobe"},
      {"nódulo pulmonar", "pulmonary nodule"},
      {"tomografia computadorizada", "computed tomography"},
      {"tomografia computorizada", "computed tomography"},
      {"ressonância magnética", "magnetic resonance imaging"},
      {"ecografia", "ultrasound"},
      {"radiografia de tórax", "chest radiograph"},
      {"radiografia", "radiograph"},
      {"pneumotórax", "pneumothorax"},
      {"pneumonia", "pneumonia"},
      {"consolidação", "consolidation"},
      {"atelectasia", "atelectasis"},
      {"cardiomegalia", "cardiomegaly"},
      {"fígado", "liver"},
      {"vesícula biliar", "gallbladder"},
      {"baço", "spleen"},
      {"rim direito", "right kidney"},
      {"rim esquerdo", "left kidney"},
      {"pâncreas", "pancreas"},
      {"pulmão", "lung"},
      {"pulmões", "lungs"},
      {"coração", "heart"},
      {"tórax", "chest"},
      {"abdómen", "abdomen"},
      {"abdome", "abdomen"},
      {"litíase", "cholelithiasis"},
      {"esteatose hepática", "hepatic steatosis"},
      {"esplenomegalia", "splenomegaly"},
      {"hepatomegalia", "hepatomegaly"},
      {"quisto", "cyst"},
      {"cisto", "cyst"},
      {"fratura", "fracture"},
      {"ascite", "ascites"},
      {"sem alterações", "unremarkable"},
      {"mostra", "shows"},
      {"revela", "reveals"},
  };
  tables["es"] = {
      {"derrame pleural", "pleural effusion"},
      {"derrame pericárdico", "pericardial effusion"},
      {"lóbulo inferior derecho", "right lower lobe"},
      {"lóbulo superior derecho", "right upper lobe"},
      {"lóbulo inferior izquierdo", "left lower lobe"},
      {"nódulo pulmonar", "pulmonary nodule"},
      {"tomografía computarizada", "computed tomography"},
      {"resonancia magnética", "magnetic resonance imaging"},
      {"ecografía", "ultrasound"},
      {"radiografía de tórax", "chest radiograph"},
      {"radiografía", "radiograph"},
      {"neumotórax", "pneumothorax"},
      {"neumonía", "pneumonia"},
      {"consolidación", "consolidation"},
      {"atelectasia", "atelectasis"},
      {"cardiomegalia", "cardiomegaly"},
      {"hígado", "liver"},
      {"vesícula biliar", "gallbladder"},
      {"bazo", "spleen"},
      {"riñón derecho", "right kidney"},
      {"riñón izquierdo", "left kidney"},
      {"páncreas", "pancreas"},
      {"pulmones", "lungs"},
      {"pulmón", "lung"},
      {"corazón", "heart"},
      {"tórax", "chest"},
      {"esteatosis hepática", "hepatic steatosis"},
      {"esplenomegalia", "splenomegaly"},
      {"quiste", "cyst"},
      {"fractura", "fracture"},
      {"ascitis", "ascites"},
      {"muestra", "shows"},
  };
  tables["fr"] = {
      {"épanchement pleural", "pleural effusion"},
      {"épanchement péricardique", "pericardial effusion"},
      {"lobe inférieur droit", "right lower lobe"},
      {"lobe supérieur droit", "right upper lobe"},
      {"lobe inférieur gauche", "left lower lobe"},
      {"nodule pulmonaire", "pulmonary nodule"},
      {"tomodensitométrie", "computed tomography"},
      {"scanner", "CT scan"},
      {"imagerie par résonance magnétique", "magnetic resonance imaging"},
      {"échographie", "ultrasound"},
      {"radiographie thoracique", "chest radiograph"},
      {"radiographie", "radiograph"},
      {"pneumothorax", "pneumothorax"},
      {"pneumonie", "pneumonia"},
      {"condensation", "consolidation"},
      {"atélectasie", "atelectasis"},
      {"cardiomégalie", "cardiomegaly"},
      {"foie", "liver"},
      {"vésicule biliaire", "gallbladder"},
      {"rate", "spleen"},
      {"rein droit", "right kidney"},
      {"rein gauche", "left kidney"},
      {"pancréas", "pancreas"},
      {"poumons", "lungs"},
      {"poumon", "lung"},
      {"cœur", "heart"},
      {"thorax", "chest"},
      {"stéatose hépatique", "hepatic steatosis"},
      {"splénomégalie", "splenomegaly"},
      {"kyste", "cyst"},
      {"fracture", "fracture"},
      {"ascite", "ascites"},
      {"montre", "shows"},
  };
  tables["it"] = {
      {"versamento pleurico", "pleural effusion"},
      {"versamento pericardico", "pericardial effusion"},
      {"lobo inferiore destro", "right lower lobe"},
      {"lobo superiore destro", "right upper lobe"},
      {"lobo inferiore sinistro", "left lower lobe"},
      {"nodulo polmonare", "pulmonary nodule"},
      {"tomografia computerizzata", "computed tomography"},
      {"risonanza magnetica", "magnetic resonance imaging"},
      {"ecografia", "ultrasound"},
      {"radiografia del torace", "chest radiograph"},
      {"radiografia", "radiograph"},
      {"pneumotorace", "pneumothorax"},
      {"polmonite", "pneumonia"},
      {"consolidamento", "consolidation"},
      {"atelettasia", "atelectasis"},
      {"cardiomegalia", "cardiomegaly"},
      {"fegato", "liver"},
      {"colecisti", "gallbladder"},
      {"milza", "spleen"},
      {"rene destro", "right kidney"},
      {"rene sinistro", "left kidney"},
      {"pancreas", "pancreas"},
      {"polmoni", "lungs"},
      {"polmone", "lung"},
      {"cuore", "heart"},
      {"torace", "chest"},
      {"steatosi epatica", "hepatic steatosis"},
      {"splenomegalia", "splenomegaly"},
      {"cisti", "cyst"},
      {"frattura", "fracture"},
      {"ascite", "ascites"},
      {"mostra", "shows"},
  };
  tables["de"] = {
      {"pleuraerguss", "pleural effusion"},
      {"perikarderguss", "pericardial effusion"},
      {"rechter unterlappen", "right lower lobe"},
      {"rechter oberlappen", "right upper lobe"},
      {"linker unterlappen", "left lower lobe"},
      {"lungenrundherd", "pulmonary nodule"},
      {"computertomographie", "computed tomography"},
      {"magnetresonanztomographie", "magnetic resonance imaging"},
      {"sonographie", "ultrasound"},
      {"ultraschall", "ultrasound"},
      {"röntgen-thorax", "chest radiograph"},
      {"röntgenaufnahme", "radiograph"},
      {"pneumothorax", "pneumothorax"},
      {"pneumonie", "pneumonia"},
      {"konsolidierung", "consolidation"},
      {"atelektase", "atelectasis"},
      {"kardiomegalie", "cardiomegaly"},
      {"leber", "liver"},
      {"gallenblase", "gallbladder"},
      {"milz", "spleen"},
      {"rechte niere", "right kidney"},
      {"linke niere", "left kidney"},
      {"bauchspeicheldrüse", "pancreas"},
      {"lungen", "lungs"},
      {"lunge", "lung"},
      {"herz", "heart"},
      {"thorax", "chest"},
      {"fettleber", "fatty liver"},
      {"splenomegalie", "splenomegaly"},
      {"zyste", "cyst"},
      {"fraktur", "fracture"},
      {"aszites", "ascites"},
      {"zeigt", "shows"},
  };
  return tables;
}

}  // namespace mra::translator
